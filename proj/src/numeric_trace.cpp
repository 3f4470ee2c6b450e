// Floating-point tracing of a closed geodesic through the ideal quadrilateral
//
//     D = { |Re z| <= 1, |z - 1/2| >= 1/2, |z + 1/2| >= 1/2 },
//
// a fundamental domain of the level-2 group with side pairings
// z -> z + 2 (Re = -1 to Re = 1) and b^{+-1} (left circle to right circle).
// Lifts are kept exact (integer forms); only positions along them are doubles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "corkscrew/errors.hpp"
#include "corkscrew/intersection.hpp"

namespace corkscrew {

namespace {

struct Arc {
  double lo, hi;      // endpoints on R, lo < hi (neither infinite inside D)
  double rep, att;    // repelling and attracting endpoint
  double s_in, s_out; // arc-length parameter at entry and exit
  AxisGeodesic form;
};

// Stable real roots of the primitive form, ordered.
std::pair<double, double> roots(const AxisGeodesic& x) {
  const long double a = x.a.get_d(), b = x.b.get_d(), c = x.c.get_d();
  const long double sd = std::sqrt(static_cast<long double>(x.discriminant().get_d()));
  if (x.a == 0) throw IntegrityError("lift through the cusp at infinity inside the domain");
  const long double q = -0.5L * (b + (b >= 0 ? sd : -sd));
  long double r1 = q / a;
  long double r2 = (q != 0) ? c / q : -r1;
  if (r1 > r2) std::swap(r1, r2);
  return {static_cast<double>(r1), static_cast<double>(r2)};
}

// ½ log((x - rep) / (att - x)): hyperbolic arc length along the semicircle
// over (rep, att), increasing toward att, as a function of the abscissa x.
double arc_param(double rep, double att, double x) { return 0.5 * std::log((x - rep) / (att - x)); }

struct Lift {
  double lo, hi, rep, att;
  AxisGeodesic form;
};

Lift make_lift(const AxisGeodesic& form) {
  auto [lo, hi] = roots(form);
  const bool att_hi = compare(form.attracting(), form.repelling()) > 0;
  return {lo, hi, att_hi ? lo : hi, att_hi ? hi : lo, form};
}

// Abscissa where the semicircle over (lo, hi) meets side k, or NaN.
// Sides: 0: Re = -1, 1: Re = 1, 2: |z + 1/2| = 1/2, 3: |z - 1/2| = 1/2.
double side_hit(const Lift& l, int k) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (k < 2) {
    const double v = k == 0 ? -1.0 : 1.0;
    return (l.lo < v && v < l.hi) ? v : nan;
  }
  const double f1 = k == 2 ? -1.0 : 0.0;
  const double f2 = f1 + 1.0;
  const bool interleave = (l.lo < f1 && f1 < l.hi && l.hi < f2) || (f1 < l.lo && l.lo < f2 && f2 < l.hi);
  if (!interleave) return nan;
  // (x - lo)(x - hi) = (x - f1)(x - f2) on both circles.
  return (f1 * f2 - l.lo * l.hi) / ((f1 + f2) - (l.lo + l.hi));
}

const IntMatrix2& pairing(int k) {
  static const IntMatrix2 m[4] = {
      generator_matrix(kA),      // leaving through Re = -1
      generator_matrix(kAInv),   // leaving through Re = 1
      generator_matrix(kB),      // leaving into the left circle
      generator_matrix(kBInv),   // leaving into the right circle
  };
  return m[k];
}

int paired_side(int k) { return k ^ 1; }

// Move z into D, accumulating the applied isometry.
IntMatrix2 reduce_into_domain(std::complex<double>& z) {
  IntMatrix2 t;
  for (int guard = 0; guard < 100000; ++guard) {
    int k = -1;
    if (z.real() < -1) k = 0;
    else if (z.real() > 1) k = 1;
    else if (std::abs(z + 0.5) < 0.5) k = 2;
    else if (std::abs(z - 0.5) < 0.5) k = 3;
    if (k < 0) return t;
    const IntMatrix2& m = pairing(k);
    z = (m.p.get_d() * z + m.q.get_d()) / (m.r.get_d() * z + m.s.get_d());
    t = m * t;
  }
  throw IntegrityError("point reduction did not terminate");
}

struct Exit {
  int side;
  double x;
  double s;
};

Exit next_exit(const Lift& l, int entry_side, double s_from) {
  Exit best{-1, 0, std::numeric_limits<double>::infinity()};
  for (int k = 0; k < 4; ++k) {
    if (k == entry_side) continue;
    double x = side_hit(l, k);
    if (std::isnan(x)) continue;
    double s = arc_param(l.rep, l.att, x);
    if (s > s_from && s < best.s) best = {k, x, s};
  }
  if (best.side < 0) throw IntegrityError("traced geodesic does not leave the domain");
  return best;
}

std::vector<Arc> trace_period(const GeodesicClass& g) {
  const IntMatrix2 m = g.matrix();
  const AxisGeodesic base = axis(m);
  const Lift base_lift = make_lift(base);
  const double c = 0.5 * (base_lift.lo + base_lift.hi);
  const double r = 0.5 * (base_lift.hi - base_lift.lo);
  // A generic point of the axis, away from the sides of D.
  const double x0 = c + 0.3183098861837907 * r;
  std::complex<double> z(x0, std::sqrt((x0 - base_lift.lo) * (base_lift.hi - x0)));
  IntMatrix2 t = reduce_into_domain(z);

  // Walk to the first side crossing from the interior point.
  Lift cur = make_lift(moebius_image(t, base));
  double s0 = arc_param(cur.rep, cur.att, z.real());
  Exit e = next_exit(cur, -1, s0);
  t = pairing(e.side) * t;
  const IntMatrix2 stop = t * m.inverse();
  int entry = paired_side(e.side);

  std::vector<Arc> arcs;
  const std::size_t cap = 4 * g.word.size() + 16;
  while (true) {
    cur = make_lift(moebius_image(t, base));
    const double x_in = side_hit(cur, entry);
    if (std::isnan(x_in)) throw IntegrityError("lift misses its entry side");
    const double s_in = arc_param(cur.rep, cur.att, x_in);
    Exit out = next_exit(cur, entry, s_in);
    arcs.push_back({cur.lo, cur.hi, cur.rep, cur.att, s_in, out.s, cur.form});
    t = pairing(out.side) * t;
    entry = paired_side(out.side);
    if (t.projectively_equal(stop)) break;
    if (arcs.size() > cap) throw IntegrityError("tracing of " + g.word.str() + " did not close up");
  }
  double total = 0;
  for (const auto& a : arcs) total += a.s_out - a.s_in;
  if (std::abs(total - g.length) > 1e-6 * std::max(1.0, g.length))
    throw IntegrityError("traced period " + std::to_string(total) + " differs from length of " + g.word.str());
  return arcs;
}

struct Crossing {
  double u, v;
};

double circular_gap(double x, double y, double period) {
  double d = std::fmod(std::abs(x - y), period);
  return std::min(d, period - d);
}

struct Collector {
  double step;
  double tol;
  std::vector<Crossing> found;
  int warnings = 0;
};

// Locate the crossing of arcs p, q (if any) and record its parameter pair.
void cross_arcs(const Arc& p, double start_p, double period_p, const Arc& q, double start_q, double period_q,
                bool unordered, Collector& col) {
  if (p.form.same_geodesic(q.form)) return;
  const bool inter = (p.lo < q.lo && q.lo < p.hi && p.hi < q.hi) || (q.lo < p.lo && p.lo < q.hi && q.hi < p.hi);
  if (!inter) return;
  const double x = (q.lo * q.hi - p.lo * p.hi) / ((q.lo + q.hi) - (p.lo + p.hi));
  const double sp = arc_param(p.rep, p.att, x);
  const double sq = arc_param(q.rep, q.att, x);
  if (!(sp >= p.s_in - col.step && sp <= p.s_out + col.step)) return;
  if (!(sq >= q.s_in - col.step && sq <= q.s_out + col.step)) return;
  const double margin = std::min({sp - p.s_in, p.s_out - sp, sq - q.s_in, q.s_out - sq});
  Crossing c{std::fmod(start_p + sp - p.s_in + period_p, period_p), std::fmod(start_q + sq - q.s_in + period_q, period_q)};
  for (const auto& o : col.found) {
    bool same = circular_gap(o.u, c.u, period_p) < col.tol && circular_gap(o.v, c.v, period_q) < col.tol;
    if (unordered && !same)
      same = circular_gap(o.u, c.v, period_p) < col.tol && circular_gap(o.v, c.u, period_q) < col.tol;
    if (same) return;
  }
  if (std::abs(margin) < 10 * col.step) ++col.warnings;
  col.found.push_back(c);
}

std::vector<double> starts(const std::vector<Arc>& arcs) {
  std::vector<double> out;
  double acc = 0;
  for (const auto& a : arcs) {
    out.push_back(acc);
    acc += a.s_out - a.s_in;
  }
  return out;
}

Collector make_collector(double step) {
  if (!(step > 0)) throw DomainError("numeric step must be positive");
  return Collector{step, std::max(10 * step, 1e-9), {}, 0};
}

}  // namespace

IntersectionResult numeric_trace_count(const GeodesicClass& g, double step) {
  Collector col = make_collector(step);
  auto arcs = trace_period(g);
  auto st = starts(arcs);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      cross_arcs(arcs[i], st[i], g.length, arcs[j], st[j], g.length, true, col);
  IntersectionResult res;
  res.method = Method::numeric;
  res.count = static_cast<long>(col.found.size());
  res.tolerance_warnings = col.warnings;
  return res;
}

IntersectionResult numeric_mutual_count(const GeodesicClass& g, const GeodesicClass& h, double step) {
  if (g.word == h.word) throw SameClass("mutual intersection of a class with itself");
  Collector col = make_collector(step);
  auto ag = trace_period(g);
  auto ah = trace_period(h);
  auto sg = starts(ag);
  auto sh = starts(ah);
  for (std::size_t i = 0; i < ag.size(); ++i)
    for (std::size_t j = 0; j < ah.size(); ++j)
      cross_arcs(ag[i], sg[i], g.length, ah[j], sh[j], h.length, false, col);
  IntersectionResult res;
  res.method = Method::numeric;
  res.count = static_cast<long>(col.found.size());
  res.tolerance_warnings = col.warnings;
  return res;
}

}  // namespace corkscrew
