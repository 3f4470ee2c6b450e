#pragma once

// Words in the free group F(a, b) and their unoriented conjugacy classes.
//
// Text syntax: `a`, `A` (= a^-1), `b`, `B` (= b^-1), concatenated.
// Letter order used for canonical forms: a < A < b < B.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corkscrew {

enum class Generator : std::uint8_t { a = 0, b = 1 };

class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Generator gen, int sign)
      : code_(static_cast<std::uint8_t>(static_cast<int>(gen) * 2 + (sign < 0 ? 1 : 0))) {}

  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = code & 3;
    return l;
  }

  constexpr Generator generator() const { return static_cast<Generator>(code_ >> 1); }
  constexpr int sign() const { return (code_ & 1) ? -1 : +1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1); }
  // 0..3 in the order a, A, b, B.
  constexpr std::uint8_t code() const { return code_; }
  char to_char() const { return "aAbB"[code_]; }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint8_t code_ = 0;
};

inline constexpr Letter kA{Generator::a, +1};
inline constexpr Letter kAInv{Generator::a, -1};
inline constexpr Letter kB{Generator::b, +1};
inline constexpr Letter kBInv{Generator::b, -1};
inline constexpr Letter kAllLetters[4] = {kA, kAInv, kB, kBInv};

using Letters = std::vector<Letter>;

Letters parse_letters(std::string_view text);
std::string to_string(std::span<const Letter> letters);
Letters inverse(std::span<const Letter> letters);

// Freely reduced word (no letter adjacent to its inverse). May be empty.
class ReducedWord {
 public:
  ReducedWord() = default;

  const Letters& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string str() const { return to_string(letters_); }

  ReducedWord operator*(const ReducedWord& rhs) const;
  ReducedWord inverse() const;

  friend ReducedWord reduce(std::span<const Letter> letters);
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  explicit ReducedWord(Letters letters) : letters_(std::move(letters)) {}
  Letters letters_;
};

ReducedWord reduce(std::span<const Letter> letters);
ReducedWord parse_word(std::string_view text);

// Canonical representative of an unoriented conjugacy class: the
// lexicographically least cyclic rotation of w or of w^-1.
class CyclicWord {
 public:
  const Letters& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string str() const { return to_string(letters_); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  // Construction only through canonicalize, so this always holds.
  bool canonical() const { return true; }

  friend CyclicWord canonicalize(const ReducedWord& w);
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  // Shortlex: length first, then letter order.
  friend std::strong_ordering operator<=>(const CyclicWord& x, const CyclicWord& y);

 private:
  explicit CyclicWord(Letters letters) : letters_(std::move(letters)) {}
  Letters letters_;
};

// Throws EmptyClass if w cyclically reduces to the identity.
CyclicWord canonicalize(const ReducedWord& w);
CyclicWord parse_class(std::string_view text);

// Cyclic reduction (strip inverse pairs from the two ends).
Letters cyclically_reduce(const ReducedWord& w);

// w = u^m with m >= 2 returns false.
bool is_primitive(const CyclicWord& w);
// Smallest u with w = u^m (as letter period of the canonical word).
CyclicWord primitive_root(const CyclicWord& w);
// Class of a cusp: a power of a, b or aB.
bool is_peripheral(const CyclicWord& w);
CyclicWord power(const CyclicWord& w, int m);

// Every canonical primitive class with at most max_letters letters, exactly once,
// ordered by (length, letter order). Peripheral classes a, b, aB are included.
std::vector<CyclicWord> enumerate_classes(int max_letters);
// Same set, one stratum (exact length n).
std::vector<CyclicWord> enumerate_stratum(int n);
void for_each_stratum_class(int n, const std::function<void(const CyclicWord&)>& fn);

// Images of a and b of an endomorphism of F(a,b).
struct Substitution {
  ReducedWord image_a;
  ReducedWord image_b;
  ReducedWord apply(std::span<const Letter> w) const;
};

// Generators of the automorphisms permuting the peripheral classes {a, b, aB}.
const std::vector<Substitution>& puncture_symmetry_generators();
// Closed orbit under those generators, sorted, including w.
std::vector<CyclicWord> puncture_symmetry_orbit(const CyclicWord& w);

}  // namespace corkscrew

template <>
struct std::hash<corkscrew::CyclicWord> {
  std::size_t operator()(const corkscrew::CyclicWord& w) const noexcept;
};
