#pragma once

#include <random>

#include "corkscrew/word.hpp"

namespace testing_support {

using namespace corkscrew;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261014);
  return gen;
}

inline Letters random_reduced(std::size_t len) {
  Letters out;
  std::uniform_int_distribution<int> pick(0, 3);
  while (out.size() < len) {
    Letter l = Letter::from_code(static_cast<std::uint8_t>(pick(rng())));
    if (!out.empty() && l == out.back().inverse()) continue;
    out.push_back(l);
  }
  return out;
}

// Primitive, non-peripheral class with 2..max_len letters.
inline CyclicWord random_hyperbolic_class(std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(2, max_len);
  while (true) {
    Letters l = random_reduced(len(rng()));
    ReducedWord w = reduce(l);
    if (cyclically_reduce(w).empty()) continue;
    CyclicWord c = canonicalize(w);
    if (is_primitive(c) && !is_peripheral(c) && c.size() >= 2) return c;
  }
}

}  // namespace testing_support
