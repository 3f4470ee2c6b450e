#pragma once

// Exact integer representation of the thrice-punctured sphere group as the
// level-2 congruence group generated by
//
//     rho(a) = [[1, 2], [0, 1]],   rho(b) = [[1, 0], [2, 1]],
//
// together with exact axis geometry on the boundary of the upper half-plane.
// Matrices are projective: M and -M describe the same isometry.

#include <gmpxx.h>

#include <optional>
#include <tuple>
#include <span>
#include <string>
#include <utility>

#include "corkscrew/word.hpp"

namespace corkscrew {

using Integer = mpz_class;

struct IntMatrix2 {
  Integer p{1}, q{0}, r{0}, s{1};

  static IntMatrix2 identity() { return {}; }
  IntMatrix2 operator*(const IntMatrix2& m) const;
  IntMatrix2 operator-() const { return {-p, -q, -r, -s}; }
  // Inverse of a determinant-one matrix.
  IntMatrix2 inverse() const { return {s, -q, -r, p}; }
  Integer trace() const { return p + s; }
  Integer det() const { return p * s - q * r; }
  bool operator==(const IntMatrix2&) const = default;
  // Equal up to sign.
  bool projectively_equal(const IntMatrix2& m) const { return *this == m || *this == -m; }
  std::string str() const;
};

IntMatrix2 generator_matrix(Letter l);
IntMatrix2 represent(std::span<const Letter> letters);
IntMatrix2 represent(const CyclicWord& w);

enum class Isometry { hyperbolic, parabolic };

// Throws IntegrityError on |trace| < 2 (this group is torsion free).
Isometry classify(const IntMatrix2& m);

// 2 arccosh(trace / 2); DomainError if trace <= 2.
double geodesic_length(const Integer& trace);
double geodesic_length(double trace);

// Inverse of the representation: the reduced a/b word of a matrix of the
// group (up to sign). Throws IntegrityError if m is not congruent to the
// identity mod 2.
ReducedWord decompose(const IntMatrix2& m);

// A point of R u {oo} of the form (u + sigma sqrt(D)) / den with den > 0,
// sigma in {-1, 0, +1} and D >= 0.
struct BoundaryPoint {
  bool infinite = false;
  Integer u{0};
  int sigma = 0;
  Integer disc{0};
  Integer den{1};

  double approx() const;
  std::string str() const;
};

// Exact total order on R u {oo}, with oo as the largest element.
int compare(const BoundaryPoint& x, const BoundaryPoint& y);

// Axis of a hyperbolic element: roots of A x^2 + B x + C = 0 with
// gcd(A, B, C) = 1 and a positive leading convention (A > 0, or A = 0 and
// B > 0 when one endpoint is at infinity). `orientation` is +1 when the
// attracting fixed point is (-B + sqrt(D)) / 2A and -1 otherwise; for A = 0
// it is -1 when oo is attracting. orientation * (A, B, C) is the oriented
// form det[v, Mv] / gcd of the positive-trace matrix M.
struct AxisGeodesic {
  Integer a{0}, b{0}, c{0};
  int orientation = 1;

  Integer discriminant() const { return b * b - 4 * a * c; }
  bool has_infinite_endpoint() const { return a == 0; }
  std::pair<BoundaryPoint, BoundaryPoint> endpoints() const;  // (smaller, larger)
  BoundaryPoint attracting() const;
  BoundaryPoint repelling() const;
  std::pair<double, double> endpoints_approx() const;
  // Same unoriented geodesic.
  bool same_geodesic(const AxisGeodesic& o) const { return a == o.a && b == o.b && c == o.c; }
  auto key() const { return std::tie(a, b, c); }
  std::string str() const;

  // Geodesic with the given rational endpoints p1/q1 != p2/q2 (q > 0),
  // oriented from the first toward the second.
  static AxisGeodesic from_rational_endpoints(const Integer& p1, const Integer& q1, const Integer& p2,
                                              const Integer& q2);
  static AxisGeodesic from_oriented_form(Integer a, Integer b, Integer c);
};

// DomainError on non-hyperbolic input.
AxisGeodesic axis(const IntMatrix2& m);

// Image of an axis under the Moebius map of g.
AxisGeodesic moebius_image(const IntMatrix2& g, const AxisGeodesic& x);

// True iff the endpoint pairs interleave on R u {oo}. SharedAxis if both
// endpoints coincide; IntegrityError if exactly one does.
bool axes_cross(const AxisGeodesic& x, const AxisGeodesic& y);

// A hyperbolic, primitive, non-peripheral class with its exact trace.
struct GeodesicClass {
  CyclicWord word;
  Integer trace;  // |tr rho(word)|
  double length = 0;
  std::optional<long> self_intersections;

  // PeripheralInput for cusp classes, DomainError for non-primitive words.
  static GeodesicClass make(const CyclicWord& w);
  IntMatrix2 matrix() const { return represent(word); }
};

}  // namespace corkscrew
