#pragma once

// Shortest classes with at least k self-intersections on the thrice-punctured
// sphere, below a length cutoff.

#include <string>
#include <vector>

#include "corkscrew/geometry.hpp"
#include "corkscrew/intersection.hpp"

namespace corkscrew {

struct SearchConfig {
  int max_word_length = 20;
  // <= 0 means "use corkscrew_length(k)".
  double length_cutoff = 0;
  Method method = Method::combinatorial;
  int workers = 1;
};

// Largest integer trace t with geodesic_length(t) <= L (up to 1e-12); 2 if none.
Integer max_trace_for_length(double L);

struct Census {
  std::vector<GeodesicClass> classes;  // (trace, word) order
  Integer max_trace;
  // Longest word among all classes below the cutoff, including ones dropped
  // by max_word_length.
  std::size_t longest_word = 0;
  bool exhaustive = true;
};

// Classes with word length <= max_word_length and geodesic length <= cutoff.
// When the cutoff is unset, DomainError.
Census enumerate_geodesics(const SearchConfig& cfg);

struct SpectrumEntry {
  long k = 0;
  double min_length = 0;
  Integer trace;
  // All classes of minimal length with >= k self-intersections, with counts.
  std::vector<GeodesicClass> witnesses;
  std::vector<CyclicWord> witness_orbit;  // orbit of witnesses.front()
  bool exhaustive = false;
  double cutoff_used = 0;
  std::size_t examined = 0;  // classes whose count was computed
  std::string certificate;
};

// IncompleteSearch if require_exhaustive and the census was truncated.
// DomainError if k < 1 or the cutoff is below corkscrew_length(k).
SpectrumEntry min_length_for(long k, const SearchConfig& cfg, bool require_exhaustive = false);

struct OptimalityVerdict {
  long k = 0;
  SpectrumEntry entry;
  bool optimal = false;               // minimum is 4k + 2 and the corkscrew attains it
  std::vector<CyclicWord> findings;   // minimal witnesses outside the corkscrew orbit
  double seconds = 0;
};

// One verdict per k in [k_lo, k_hi]; empty if k_lo > k_hi. Propagates IncompleteSearch
// when require_exhaustive.
std::vector<OptimalityVerdict> verify_corkscrew_optimality(long k_lo, long k_hi, const SearchConfig& cfg,
                                                           bool require_exhaustive = true);

// Self-intersection counts for many classes, spread over `workers` threads;
// the result order matches the input.
std::vector<long> parallel_self_intersections(const std::vector<GeodesicClass>& classes, Method m, int workers);

}  // namespace corkscrew
