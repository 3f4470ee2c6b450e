#include "corkscrew/geometry.hpp"

#include <cmath>
#include <sstream>

#include "corkscrew/errors.hpp"

namespace corkscrew {

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& m) const {
  return {p * m.p + q * m.r, p * m.q + q * m.s, r * m.p + s * m.r, r * m.q + s * m.s};
}

std::string IntMatrix2::str() const {
  std::ostringstream os;
  os << "[[" << p << "," << q << "],[" << r << "," << s << "]]";
  return os.str();
}

IntMatrix2 generator_matrix(Letter l) {
  switch (l.code()) {
    case 0: return {1, 2, 0, 1};
    case 1: return {1, -2, 0, 1};
    case 2: return {1, 0, 2, 1};
    default: return {1, 0, -2, 1};
  }
}

IntMatrix2 represent(std::span<const Letter> letters) {
  IntMatrix2 m;
  for (Letter l : letters) m = m * generator_matrix(l);
  return m;
}

IntMatrix2 represent(const CyclicWord& w) { return represent(w.letters()); }

Isometry classify(const IntMatrix2& m) {
  Integer t = abs(m.trace());
  if (t < 2) throw IntegrityError("elliptic element " + m.str() + " in a torsion-free group");
  return t == 2 ? Isometry::parabolic : Isometry::hyperbolic;
}

double geodesic_length(double trace) {
  if (!(trace > 2)) throw DomainError("geodesic_length needs trace > 2");
  const double x = trace / 2;
  if (x > 1e8) return 2 * (std::log(x) + std::log1p(std::sqrt(1 - 1 / (x * x))));
  return 2 * std::log(x + std::sqrt(x * x - 1));
}

double geodesic_length(const Integer& trace) {
  if (trace <= 2) throw DomainError("geodesic_length needs trace > 2, got " + trace.get_str());
  if (trace < Integer(1000000000)) {
    // x^2 - 1 computed exactly for small traces keeps the last ulp honest.
    const double x = trace.get_d() / 2;
    const Integer tt = trace * trace - 4;
    return 2 * std::log(x + std::sqrt(tt.get_d()) / 2);
  }
  return geodesic_length(trace.get_d());
}

namespace {

int sgn(const Integer& x) { return ::sgn(x); }

// sign(e + f sqrt(z)), z >= 0.
int sign_sum(const Integer& e, const Integer& f, const Integer& z) {
  int se = sgn(e);
  int sf = (z == 0) ? 0 : sgn(f);
  if (se == 0) return sf;
  if (sf == 0 || se == sf) return se;
  Integer lhs = e * e;
  Integer rhs = f * f * z;
  if (lhs > rhs) return se;
  if (lhs < rhs) return sf;
  return 0;
}

// sign(b sqrt(x) + c sqrt(y)).
int sign_roots(const Integer& b, const Integer& x, const Integer& c, const Integer& y) {
  int sb = (x == 0) ? 0 : sgn(b);
  int sc = (y == 0) ? 0 : sgn(c);
  if (sb == 0) return sc;
  if (sc == 0 || sb == sc) return sb;
  Integer lhs = b * b * x;
  Integer rhs = c * c * y;
  if (lhs > rhs) return sb;
  if (lhs < rhs) return sc;
  return 0;
}

// sign(a + b sqrt(x) + c sqrt(y)).
int sign_three(const Integer& a, const Integer& b, const Integer& x, const Integer& c, const Integer& y) {
  int s = sign_roots(b, x, c, y);
  int sa = sgn(a);
  if (s == 0) return sa;
  if (sa == 0 || sa == s) return s;
  // Opposite signs: compare a^2 with (b sqrt x + c sqrt y)^2.
  Integer e = a * a - b * b * x - c * c * y;
  Integer f = -2 * b * c;
  int d = sign_sum(e, f, x * y);
  if (d > 0) return sa;
  if (d < 0) return s;
  return 0;
}

}  // namespace

double BoundaryPoint::approx() const {
  if (infinite) return INFINITY;
  double root = sigma == 0 ? 0.0 : sigma * std::sqrt(disc.get_d());
  return (u.get_d() + root) / den.get_d();
}

std::string BoundaryPoint::str() const {
  if (infinite) return "oo";
  std::ostringstream os;
  os << "(" << u;
  if (sigma != 0) os << (sigma > 0 ? " + " : " - ") << "sqrt(" << disc << ")";
  os << ")/" << den;
  return os.str();
}

int compare(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x.infinite || y.infinite) return static_cast<int>(x.infinite) - static_cast<int>(y.infinite);
  Integer a = x.u * y.den - y.u * x.den;
  Integer b = x.sigma * y.den;
  Integer c = -y.sigma * x.den;
  return sign_three(a, b, x.disc, c, y.disc);
}

AxisGeodesic AxisGeodesic::from_oriented_form(Integer a, Integer b, Integer c) {
  Integer g = gcd(gcd(a, b), c);
  if (g == 0) throw DomainError("zero quadratic form");
  a /= g;
  b /= g;
  c /= g;
  int orientation = +1;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
    orientation = -1;
  }
  AxisGeodesic out{a, b, c, orientation};
  if (out.discriminant() <= 0) throw DomainError("form " + out.str() + " has no distinct real roots");
  return out;
}

AxisGeodesic AxisGeodesic::from_rational_endpoints(const Integer& p1, const Integer& q1, const Integer& p2,
                                                   const Integer& q2) {
  if (q1 <= 0 || q2 <= 0) throw DomainError("denominators must be positive");
  int ord = ::sgn(Integer(p2 * q1 - p1 * q2));
  if (ord == 0) throw DomainError("endpoints must be distinct");
  Integer a = q1 * q2;
  Integer b = -(q1 * p2 + q2 * p1);
  Integer c = p1 * p2;
  return from_oriented_form(ord * a, ord * b, ord * c);
}

std::pair<BoundaryPoint, BoundaryPoint> AxisGeodesic::endpoints() const {
  const Integer d = discriminant();
  if (a == 0) {
    BoundaryPoint finite{false, -c, 0, 0, b};
    return {finite, BoundaryPoint{true}};
  }
  BoundaryPoint lo{false, -b, -1, d, 2 * a};
  BoundaryPoint hi{false, -b, +1, d, 2 * a};
  return {lo, hi};
}

BoundaryPoint AxisGeodesic::attracting() const {
  auto [lo, hi] = endpoints();
  if (a == 0) return orientation < 0 ? hi : lo;
  return orientation > 0 ? hi : lo;
}

BoundaryPoint AxisGeodesic::repelling() const {
  auto [lo, hi] = endpoints();
  if (a == 0) return orientation < 0 ? lo : hi;
  return orientation > 0 ? lo : hi;
}

std::pair<double, double> AxisGeodesic::endpoints_approx() const {
  auto [lo, hi] = endpoints();
  return {lo.approx(), hi.approx()};
}

std::string AxisGeodesic::str() const {
  std::ostringstream os;
  os << a << "x^2 + " << b << "x + " << c << " (orientation " << (orientation > 0 ? "+" : "-") << ")";
  return os.str();
}

AxisGeodesic axis(const IntMatrix2& m) {
  if (classify(m) != Isometry::hyperbolic) throw DomainError("axis of non-hyperbolic element " + m.str());
  const IntMatrix2 pos = m.trace() > 0 ? m : -m;
  return AxisGeodesic::from_oriented_form(pos.r, pos.s - pos.p, -pos.q);
}

AxisGeodesic moebius_image(const IntMatrix2& h, const AxisGeodesic& x) {
  // F(v) -> F(h^-1 v) with F the oriented form.
  const Integer a = x.orientation * x.a;
  const Integer b = x.orientation * x.b;
  const Integer c = x.orientation * x.c;
  const Integer& p = h.p;
  const Integer& q = h.q;
  const Integer& r = h.r;
  const Integer& s = h.s;
  Integer na = a * s * s - b * r * s + c * r * r;
  Integer nb = -2 * a * s * q + b * (s * p + q * r) - 2 * c * r * p;
  Integer nc = a * q * q - b * q * p + c * p * p;
  return AxisGeodesic::from_oriented_form(na, nb, nc);
}

bool axes_cross(const AxisGeodesic& x, const AxisGeodesic& y) {
  if (x.same_geodesic(y)) throw SharedAxis("axes " + x.str() + " and " + y.str() + " coincide");
  auto [x1, x2] = x.endpoints();
  auto [y1, y2] = y.endpoints();
  int c11 = compare(y1, x1), c12 = compare(y1, x2);
  int c21 = compare(y2, x1), c22 = compare(y2, x2);
  if (c11 == 0 || c12 == 0 || c21 == 0 || c22 == 0)
    throw IntegrityError("axes " + x.str() + " and " + y.str() + " share exactly one endpoint");
  bool y1_inside = c11 > 0 && c12 < 0;
  bool y2_inside = c21 > 0 && c22 < 0;
  return y1_inside != y2_inside;
}

ReducedWord decompose(const IntMatrix2& m) {
  if (m.det() != 1) throw IntegrityError("decompose: determinant of " + m.str() + " is not 1");
  auto odd = [](const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; };
  if (!odd(m.p) || !odd(m.s) || odd(m.q) || odd(m.r))
    throw IntegrityError("decompose: " + m.str() + " is not congruent to I mod 2");
  // Left-multiply by even powers A^k, B^k until the first column is (+-1, 0),
  // shrinking max(|p|, |r|) at each step.
  IntMatrix2 cur = m;
  Letters applied_inverse;  // letters of the inverse of the accumulated left factor, in order
  auto nearest = [](const Integer& num, const Integer& den) {
    // k minimizing |num + 2 k den|, den != 0.
    Integer twice = 2 * den;
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), Integer(-num + den).get_mpz_t(), twice.get_mpz_t());
    return Integer(k);
  };
  std::vector<std::pair<Letter, Integer>> steps;
  while (cur.r != 0) {
    if (abs(cur.p) > abs(cur.r)) {
      Integer k = nearest(cur.p, cur.r);
      cur = IntMatrix2{1, 2 * k, 0, 1} * cur;
      steps.push_back({kA, k});
    } else {
      Integer k = nearest(cur.r, cur.p);
      cur = IntMatrix2{1, 0, 2 * k, 1} * cur;
      steps.push_back({kB, k});
    }
  }
  // cur = +-[[1, 2j], [0, 1]].
  Integer j = (cur.p > 0 ? cur.q : Integer(-cur.q)) / 2;
  auto emit = [&](Letter gen, const Integer& e) {
    Letter l = e > 0 ? gen : gen.inverse();
    Integer n = abs(e);
    for (Integer i = 0; i < n; ++i) applied_inverse.push_back(l);
  };
  // m = S_1^-1 ... S_k^-1 A^j where S_i were applied in order.
  for (const auto& [gen, k] : steps) emit(gen, Integer(-k));
  emit(kA, j);
  return reduce(applied_inverse);
}

GeodesicClass GeodesicClass::make(const CyclicWord& w) {
  if (is_peripheral(w)) throw PeripheralInput("class " + w.str() + " is a cusp class");
  if (!is_primitive(w)) throw DomainError("class " + w.str() + " is not primitive");
  IntMatrix2 m = represent(w);
  if (classify(m) != Isometry::hyperbolic)
    throw IntegrityError("non-peripheral class " + w.str() + " is not hyperbolic");
  GeodesicClass g{w, abs(m.trace()), 0.0, std::nullopt};
  g.length = geodesic_length(g.trace);
  return g;
}

}  // namespace corkscrew
