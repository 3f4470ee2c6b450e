#pragma once

// Trace-bounded census of geodesic classes.
//
// Every hyperbolic element of SL(2, Z) with positive trace is conjugate to a
// product of R = [[1,1],[0,1]] and L = [[1,0],[1,1]] containing both letters,
// unique up to rotation. Since the level-2 group is normal of index 6 (mod
// sign), its classes of trace t are the conjugates c W c^-1 of such words W
// congruent to I mod 2, with c running over six coset representatives. Trace
// is monotone under extending a positive word, so the prefix tree can be
// pruned at the trace bound and the census is complete.

#include <string>
#include <vector>

#include "corkscrew/geometry.hpp"

namespace corkscrew {

// Every primitive, non-peripheral class with |trace| <= max_trace, ordered
// by (trace, shortlex word).
std::vector<GeodesicClass> classes_up_to_trace(const Integer& max_trace);

// Positive R/L necklaces (least rotation, both letters, any period) with
// trace <= max_trace, as strings over {R, L}.
std::vector<std::string> positive_necklaces(const Integer& max_trace);

struct StratumMin {
  int n = 0;
  Integer trace;
  double length = 0;
  CyclicWord witness;  // least word (shortlex) attaining the minimum
};

// Minimal geodesic length over hyperbolic cyclically reduced words of exactly
// n letters (powers included). Exact: a^(n-1) b has trace 4n - 2, so the
// census up to that trace contains the minimizer. DomainError if n < 2.
StratumMin stratum_min_length(int n);

}  // namespace corkscrew
