#include "corkscrew/word.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "corkscrew/errors.hpp"

namespace corkscrew {

Letters parse_letters(std::string_view text) {
  Letters out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': out.push_back(kA); break;
      case 'A': out.push_back(kAInv); break;
      case 'b': out.push_back(kB); break;
      case 'B': out.push_back(kBInv); break;
      default:
        throw ParseError(std::string("invalid letter '") + c + "' in word \"" + std::string(text) +
                         "\" (expected a, A, b, B)");
    }
  }
  return out;
}

std::string to_string(std::span<const Letter> letters) {
  std::string s;
  s.reserve(letters.size());
  for (Letter l : letters) s.push_back(l.to_char());
  return s;
}

Letters inverse(std::span<const Letter> letters) {
  Letters out(letters.rbegin(), letters.rend());
  for (Letter& l : out) l = l.inverse();
  return out;
}

ReducedWord reduce(std::span<const Letter> letters) {
  Letters stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return ReducedWord(std::move(stack));
}

ReducedWord parse_word(std::string_view text) { return reduce(parse_letters(text)); }

ReducedWord ReducedWord::operator*(const ReducedWord& rhs) const {
  Letters joined = letters_;
  joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(joined);
}

ReducedWord ReducedWord::inverse() const { return ReducedWord(corkscrew::inverse(letters_)); }

Letters cyclically_reduce(const ReducedWord& w) {
  const Letters& l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Letters(l.begin() + static_cast<std::ptrdiff_t>(lo), l.begin() + static_cast<std::ptrdiff_t>(hi));
}

namespace {

// Least rotation by direct comparison; words here are short.
Letters least_rotation(const Letters& w) {
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter x = w[(r + i) % n];
      Letter y = w[(best + i) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  Letters out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = w[(best + i) % n];
  return out;
}

// Smallest period p of w that divides |w|.
std::size_t cyclic_period(const Letters& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i - p]);
    if (ok) return p;
  }
  return n;
}

}  // namespace

CyclicWord canonicalize(const ReducedWord& w) {
  Letters c = cyclically_reduce(w);
  if (c.empty()) throw EmptyClass("word \"" + w.str() + "\" is conjugate to the identity");
  Letters fwd = least_rotation(c);
  Letters bwd = least_rotation(inverse(c));
  return CyclicWord(std::min(fwd, bwd));
}

CyclicWord parse_class(std::string_view text) { return canonicalize(parse_word(text)); }

std::strong_ordering operator<=>(const CyclicWord& x, const CyclicWord& y) {
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  return x.letters_ <=> y.letters_;
}

bool is_primitive(const CyclicWord& w) { return cyclic_period(w.letters()) == w.size(); }

CyclicWord primitive_root(const CyclicWord& w) {
  std::size_t p = cyclic_period(w.letters());
  Letters root(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(p));
  return canonicalize(reduce(root));
}

bool is_peripheral(const CyclicWord& w) {
  static const std::vector<CyclicWord> cusps = {parse_class("a"), parse_class("b"), parse_class("aB")};
  CyclicWord root = primitive_root(w);
  return std::find(cusps.begin(), cusps.end(), root) != cusps.end();
}

CyclicWord power(const CyclicWord& w, int m) {
  if (m < 1) throw DomainError("power exponent must be positive");
  Letters l;
  l.reserve(w.size() * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) l.insert(l.end(), w.letters().begin(), w.letters().end());
  return canonicalize(reduce(l));
}

void for_each_stratum_class(int n, const std::function<void(const CyclicWord&)>& fn) {
  if (n < 1) return;
  const auto len = static_cast<std::size_t>(n);
  Letters buf(len);
  // Fredricksen-Kessler-Maiorana generation restricted to freely reduced
  // words: keeps prenecklaces only and emits Lyndon words (primitive necklaces).
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t t, std::size_t p) {
    if (t == len) {
      if (p != len) return;
      if (len > 1 && buf[len - 1] == buf[0].inverse()) return;
      Letters inv = least_rotation(inverse(buf));
      if (inv < buf) return;
      fn(canonicalize(reduce(buf)));
      return;
    }
    std::uint8_t start = (t == 0) ? 0 : buf[t - p].code();
    for (std::uint8_t c = start; c < 4; ++c) {
      Letter l = Letter::from_code(c);
      if (t > 0 && l == buf[t - 1].inverse()) continue;
      buf[t] = l;
      gen(t + 1, (t == 0 || c != start) ? t + 1 : p);
    }
  };
  gen(0, 1);
}

std::vector<CyclicWord> enumerate_stratum(int n) {
  std::vector<CyclicWord> out;
  for_each_stratum_class(n, [&](const CyclicWord& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicWord> enumerate_classes(int max_letters) {
  std::vector<CyclicWord> out;
  for (int n = 1; n <= max_letters; ++n) {
    auto s = enumerate_stratum(n);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

ReducedWord Substitution::apply(std::span<const Letter> w) const {
  Letters out;
  for (Letter l : w) {
    const ReducedWord& img = (l.generator() == Generator::a) ? image_a : image_b;
    if (l.sign() > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      Letters inv = inverse(img.letters());
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(out);
}

const std::vector<Substitution>& puncture_symmetry_generators() {
  // swap: a <-> b sends aB to bA = (aB)^-1.
  // tau:  a -> a, b -> Ba fixes a and exchanges the cusps b and aB.
  static const std::vector<Substitution> gens = {
      Substitution{parse_word("b"), parse_word("a")},
      Substitution{parse_word("a"), parse_word("Ba")},
  };
  return gens;
}

std::vector<CyclicWord> puncture_symmetry_orbit(const CyclicWord& w) {
  std::set<CyclicWord> seen{w};
  std::deque<CyclicWord> queue{w};
  while (!queue.empty()) {
    CyclicWord cur = queue.front();
    queue.pop_front();
    for (const Substitution& s : puncture_symmetry_generators()) {
      CyclicWord img = canonicalize(s.apply(cur.letters()));
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace corkscrew

std::size_t std::hash<corkscrew::CyclicWord>::operator()(const corkscrew::CyclicWord& w) const noexcept {
  std::size_t h = w.size();
  for (auto l : w.letters()) h = h * 5 + l.code() + 1;
  return h;
}
