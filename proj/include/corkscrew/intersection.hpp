#pragma once

// Intersection numbers of closed geodesics on the thrice-punctured sphere.
//
// Three independent routes:
//  * combinatorial: linked pairs of lifts through the base vertex of the
//    Cayley tree, decided from letters alone with the boundary cyclic order;
//  * geometric: crossing double cosets <g> h <g>, decided by exact
//    quadratic-irrational comparisons of axis endpoints;
//  * numeric: floating-point tracing of the closed geodesic through a
//    fundamental domain, counting crossings of the traced segments.

#include <array>
#include <string>
#include <vector>

#include "corkscrew/geometry.hpp"
#include "corkscrew/word.hpp"

namespace corkscrew {

enum class Method { combinatorial, geometric, numeric };

std::string to_string(Method m);
Method parse_method(const std::string& s);

struct IntersectionResult {
  long count = 0;
  Method method = Method::combinatorial;
  // Geometric: one coset representative h per crossing <g>-orbit of lifts.
  // Combinatorial: linked rotation pairs "i,j" with a weight tag.
  std::vector<std::string> certificate;
  // False when the geometric candidate family was truncated by `radius`.
  bool complete = true;
  // Numeric only: crossings closer than 10 * step to a segment end.
  int tolerance_warnings = 0;
};

// Cyclic order of the four letter cones on the boundary circle, listed in
// increasing order of the real line cut at the cusp of a. Derived once from
// exact fixed-point comparisons; the result is (A, B, b, a).
const std::array<Letter, 4>& boundary_letter_order();

// Linear order on infinite reduced words induced by the boundary order:
// negative, zero, positive like a three-way comparison. `lhs` and `rhs`
// are read for at most `horizon` letters; IntegrityError if they agree that long.
int compare_ends(const std::vector<Letter>& lhs, const std::vector<Letter>& rhs);

// Periodic infinite word read forward from position i of w, or backward
// (inverse letters) from just before position i, truncated to `length`.
std::vector<Letter> forward_end(const CyclicWord& w, std::size_t i, std::size_t length);
std::vector<Letter> backward_end(const CyclicWord& w, std::size_t i, std::size_t length);

// PeripheralInput on cusp classes, DomainError on non-primitive classes.
IntersectionResult self_int_combinatorial(const CyclicWord& w);
IntersectionResult mutual_int_combinatorial(const CyclicWord& g, const CyclicWord& h);

// radius bounds the word length of the double-coset candidates considered;
// the result is complete iff radius >= 2 |g| - 2. Use 0 for "complete".
IntersectionResult self_int_geometric(const GeodesicClass& g, int radius = 0);
// SameClass if g and h are the same unoriented class.
IntersectionResult mutual_int(const GeodesicClass& g, const GeodesicClass& h, int radius = 0);

// Floating-point cross-check; `step` is the hyperbolic-length tolerance used
// to extend segments and to identify repeated crossings.
IntersectionResult numeric_trace_count(const GeodesicClass& g, double step = 1e-7);
IntersectionResult numeric_mutual_count(const GeodesicClass& g, const GeodesicClass& h, double step = 1e-7);

// Self-intersection by the selected method.
IntersectionResult self_intersection(const GeodesicClass& g, Method m);

// Test oracle: the geometric count with candidates taken from the whole
// ball of reduced words of length <= radius. Exponential; short words only.
long self_int_geometric_ball(const GeodesicClass& g, int radius);

}  // namespace corkscrew
