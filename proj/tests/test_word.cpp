#include <algorithm>
#include <set>

#include "corkscrew/errors.hpp"
#include "corkscrew/word.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace corkscrew;
using testing_support::random_reduced;
using testing_support::rng;

namespace {

// Naive canonical form: minimum over every rotation of w and of w^-1.
Letters naive_canonical(const Letters& w) {
  Letters best = w;
  for (const Letters& base : {w, inverse(w)}) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      Letters rot(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
      best = std::min(best, rot);
    }
  }
  return best;
}

bool naive_power(const Letters& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = w[i] == w[i % d];
    if (same) return true;
  }
  return false;
}

std::set<Letters> brute_force_classes(int max_letters) {
  std::set<Letters> out;
  for (int n = 1; n <= max_letters; ++n) {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      Letters w;
      std::size_t c = code;
      for (int i = 0; i < n; ++i, c /= 4) w.push_back(Letter::from_code(static_cast<std::uint8_t>(c % 4)));
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = w[static_cast<std::size_t>(i)] != w[static_cast<std::size_t>((i + 1) % n)].inverse();
      if (n == 1) ok = true;
      if (!ok || naive_power(w)) continue;
      out.insert(naive_canonical(w));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(reduce(parse_letters("aA")).empty());
  CHECK(reduce(parse_letters("abBa")).str() == "aa");
  CHECK(reduce(parse_letters("ab")).str() == "ab");
  CHECK(reduce(parse_letters("abBAb")).str() == "b");
}

TEST_CASE("reduce is idempotent") {
  for (int i = 0; i < 200; ++i) {
    Letters raw;
    std::uniform_int_distribution<int> pick(0, 3);
    for (int j = 0; j < 20; ++j) raw.push_back(Letter::from_code(static_cast<std::uint8_t>(pick(rng()))));
    ReducedWord once = reduce(raw);
    CHECK(reduce(once.letters()) == once);
  }
}

TEST_CASE("parse rejects letters outside aAbB") {
  CHECK_THROWS_AS(parse_letters("abc"), ParseError);
  CHECK_THROWS_AS(parse_letters("a b"), ParseError);
}

TEST_CASE("canonicalize: conjugation, inversion, rotation") {
  CHECK(canonicalize(parse_word("baB")) == parse_class("a"));
  CHECK(canonicalize(parse_word("BA")) == parse_class("ab"));
  CHECK(canonicalize(parse_word("aba")) == parse_class("aab"));
  CHECK(parse_class("ab").str() == "ab");
  CHECK(parse_class("BA").str() == "ab");
  CHECK_THROWS_AS(canonicalize(parse_word("abBA")), EmptyClass);
  CHECK_THROWS_AS(parse_class(""), EmptyClass);
}

TEST_CASE("canonicalize is constant on conjugacy-and-inversion orbits") {
  for (int i = 0; i < 500; ++i) {
    Letters w = random_reduced(1 + i % 12);
    ReducedWord rw = reduce(w);
    if (cyclically_reduce(rw).empty()) continue;
    CyclicWord c = canonicalize(rw);
    CHECK(canonicalize(reduce(c.letters())) == c);
    ReducedWord h = reduce(random_reduced(1 + i % 5));
    CHECK(canonicalize(h * rw * h.inverse()) == c);
    CHECK(canonicalize(rw.inverse()) == c);
    Letters rot = cyclically_reduce(rw);
    std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(i % rot.size()), rot.end());
    CHECK(canonicalize(reduce(rot)) == c);
    CHECK(c.letters() == naive_canonical(cyclically_reduce(rw)));
  }
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(parse_class("ab")));
  CHECK_FALSE(is_primitive(parse_class("abab")));
  CHECK(is_primitive(parse_class("aab")));
  for (const auto& w : enumerate_classes(5))
    for (int m = 2; m <= 4; ++m) CHECK_FALSE(is_primitive(power(w, m)));
}

TEST_CASE("enumerate_classes small cases") {
  auto one = enumerate_classes(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].str() == "a");
  CHECK(one[1].str() == "b");
  auto two = enumerate_classes(2);
  REQUIRE(two.size() == 4);
  CHECK(two[2].str() == "ab");
  CHECK(two[3].str() == "aB");
}

TEST_CASE("enumerate_classes matches string brute force up to 8 letters") {
  auto fast = enumerate_classes(8);
  auto slow = brute_force_classes(8);
  CHECK(fast.size() == slow.size());
  std::set<Letters> fast_set;
  for (const auto& w : fast) fast_set.insert(w.letters());
  CHECK(fast_set.size() == fast.size());
  CHECK(fast_set == slow);
  CHECK(std::is_sorted(fast.begin(), fast.end()));
}

TEST_CASE("peripheral classes") {
  CHECK(is_peripheral(parse_class("a")));
  CHECK(is_peripheral(parse_class("B")));
  CHECK(is_peripheral(parse_class("aB")));
  CHECK(is_peripheral(parse_class("bA")));
  CHECK(is_peripheral(parse_class("aaa")));
  CHECK(is_peripheral(parse_class("aBaB")));
  CHECK_FALSE(is_peripheral(parse_class("ab")));
  CHECK_FALSE(is_peripheral(parse_class("aab")));
}

TEST_CASE("puncture symmetry orbits") {
  auto fig8 = puncture_symmetry_orbit(parse_class("ab"));
  CHECK(fig8 == std::vector<CyclicWord>{parse_class("ab"), parse_class("aaB"), parse_class("aBB")});
  auto k2 = puncture_symmetry_orbit(parse_class("aab"));
  CHECK(std::find(k2.begin(), k2.end(), parse_class("abb")) != k2.end());
  // Every generator fixes the set of cusp classes.
  for (const auto& s : puncture_symmetry_generators()) {
    for (const char* cusp : {"a", "b", "aB"}) CHECK(is_peripheral(canonicalize(s.apply(parse_letters(cusp)))));
  }
  // The swap generator keeps letter counts.
  for (const auto& w : enumerate_classes(6)) {
    CHECK(canonicalize(puncture_symmetry_generators()[0].apply(w.letters())).size() == w.size());
  }
  for (const auto& w : enumerate_classes(6)) {
    auto orbit = puncture_symmetry_orbit(w);
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));
    CHECK(std::find(orbit.begin(), orbit.end(), w) != orbit.end());
  }
}
