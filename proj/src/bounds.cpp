#include "corkscrew/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "corkscrew/errors.hpp"

namespace corkscrew {

namespace {

using Wide = boost::multiprecision::cpp_dec_float_50;

// Sign of margin(x) > 0, recomputed in 50 digits when the double result is
// too close to zero to trust.
template <class F>
bool decide(F margin, double scale) {
  const double m = margin(double{});
  if (std::abs(m) > 1e-9 * std::max(1.0, std::abs(scale))) return m > 0;
  return margin(Wide{}) > 0;
}

double acosh_stable(double x) {
  if (x > 1e8) return std::log(x) + std::log1p(std::sqrt(1 - 1 / (x * x)));
  return std::log(x + std::sqrt(x * x - 1));
}

}  // namespace

void BoundParams::validate() const {
  if (!(k >= 1)) throw DomainError("k must be >= 1");
  if (!(a > 0 && a < 1)) throw DomainError("exponent a must lie in (0, 1)");
}

CuspExcursion CuspExcursion::from_depth(double N) {
  if (!(N > 0)) throw DomainError("depth N must be positive");
  CuspExcursion e;
  e.N = N;
  e.r = 1 / (2 * std::sinh(1 / N));
  if (!(e.r > 1))
    throw DomainError("depth N = " + std::to_string(N) + " gives lift radius r <= 1 (needs N > 1/arcsinh(1/2))");
  e.strand_length = 2 * acosh_stable(e.r);
  e.w = 2 * std::sqrt(e.r * e.r - 1);
  return e;
}

CyclicWord corkscrew_word(long k) {
  if (k < 1) throw DomainError("corkscrew needs k >= 1 (a^0 b is a cusp class)");
  Letters l(static_cast<std::size_t>(k), kA);
  l.push_back(kB);
  return canonicalize(reduce(l));
}

double corkscrew_length(double k) {
  if (!(k >= 1)) throw DomainError("corkscrew needs k >= 1");
  return 2 * acosh_stable(2 * k + 1);
}

double thin_travel_cost(double N) {
  if (!(N > std::numbers::e)) throw DomainError("thin_travel_cost needs N > e");
  return -std::log(std::sinh(1 / N));
}

double thin_travel_gap(double N) {
  if (!(N > std::numbers::e)) throw DomainError("thin_travel_gap needs N > e");
  const double x = 1 / N;
  if (x < 1e-3) return x * x / 6 - x * x * x * x / 180;
  return std::log(std::sinh(x) / x);
}

double relative_thick_bound(const BoundParams& p) {
  p.validate();
  const double v = 2 * std::pow(p.k, p.a) * std::log(p.k);
  return v * v;
}

bool thick_bound_negligible(double k, double exponent) {
  if (!(k > 1)) throw DomainError("thick_bound_negligible needs k > 1");
  // log form: log 4 + 2 log log k < (e - 4/5) log k.
  auto margin = [k, exponent](auto zero) {
    using T = decltype(zero);
    using std::log;
    T lk = log(T(k));
    T e = T(exponent) - T(4) / 5;
    return e * lk - log(T(4)) - 2 * log(lk);
  };
  return decide(margin, std::log(k));
}

bool core_contradiction(double log_k) {
  auto margin = [log_k](auto zero) {
    using T = decltype(zero);
    T L(log_k);
    return (T(8) / 5 * L - 2) - (T(6) / 5 * L + 6);
  };
  return decide(margin, log_k);
}

bool thinarcs_excess(double log_k) {
  auto margin = [log_k](auto zero) {
    using T = decltype(zero);
    T L(log_k);
    return 3 * (T(4) / 5 * L - 2) - (2 * L + 4);
  };
  return decide(margin, log_k);
}

CuspBounds cusp_self_int_bounds(const CuspExcursion& e) {
  if (!(e.r > 1)) throw DomainError("cusp bounds need r > 1");
  CuspBounds b;
  b.twice_root = 2 * std::sqrt(e.r * e.r - 1);
  // No crossing at all while the two lifts cannot overlap a full translate.
  b.exact = std::max(0L, static_cast<long>(std::floor(b.twice_root)) - 1);
  b.lower = static_cast<long>(std::ceil(b.twice_root - 2));
  b.upper = static_cast<long>(std::floor(e.N - 1));
  return b;
}

double cusp_mutual_bound(const CuspExcursion& e) {
  if (!(e.r > 1)) throw DomainError("cusp bounds need r > 1");
  return 4 * std::sqrt(e.r * e.r - 1);
}

long cusp_translate_max(const CuspExcursion& e) {
  if (!(e.r > 1)) throw DomainError("cusp bounds need r > 1");
  const double reach = -e.r + 2 * std::sqrt(e.r * e.r - 1);
  long best = 0;
  for (long n = 1; -e.r + static_cast<double>(n) <= reach; ++n) best = n;
  return best;
}

double collar_half_width(const CollarParams& c) {
  if (!(c.core_length > 0)) throw DomainError("collar core length must be positive");
  return std::asinh(1 / std::sinh(c.core_length / 2));
}

namespace {
void check_positive(const CollarParams& c, double x, double y) {
  if (!(c.core_length > 0 && x > 0 && y > 0)) throw DomainError("collar lengths must be positive");
}
}  // namespace

long collar_winding_bound(const CollarParams& c, double la, double lb) {
  check_positive(c, la, lb);
  return static_cast<long>(std::floor((la + lb) / c.core_length)) + 1;
}

long collar_self_winding_bound(const CollarParams& c, double lb) {
  check_positive(c, lb, lb);
  return static_cast<long>(std::floor(lb / c.core_length)) + 1;
}

long collar_returning_bound(const CollarParams& c, double la, double lb) {
  check_positive(c, la, lb);
  return static_cast<long>(std::floor(2 + (la + lb) / c.core_length));
}

bool collar_cap_below_budget(double k, double exponent) {
  if (!(k > 1)) throw DomainError("collar regime needs k > 1");
  // log(1 + k^(4/5) (2 log k + 4)) < e log k
  auto margin = [k, exponent](auto zero) {
    using T = decltype(zero);
    using std::log;
    using std::pow;
    T lk = log(T(k));
    T cap = 1 + pow(T(k), T(4) / 5) * (2 * lk + 4);
    return T(exponent) * lk - log(cap);
  };
  return decide(margin, std::log(k));
}

double area_bound_from_boundary(double L, bool punctured) {
  if (!(L > 0)) throw DomainError("boundary length must be positive");
  if (punctured) return L;
  const double pi = std::numbers::pi;
  // Root of A^2 + 4 pi A = L^2, written to avoid cancellation for small L.
  return L * L / (2 * pi + std::sqrt(4 * pi * pi + L * L));
}

bool isoperimetric_check(const IsoperimetricQuery& q) {
  if (!(q.boundary_length > 0) || !(q.area >= 0)) throw DomainError("isoperimetric query needs L > 0, A >= 0");
  if (q.punctured) return q.area <= q.boundary_length;
  return q.area * q.area + 4 * std::numbers::pi * q.area <= q.boundary_length * q.boundary_length;
}

double max_curve_length(double k) { return corkscrew_length(k); }

double max_curve_length_loose(double k) {
  if (!(k >= 1)) throw DomainError("k must be >= 1");
  return 2 * std::log(k) + 4;
}

std::vector<AsymptoticRow> asymptotic_table(const std::vector<double>& ks) {
  std::vector<AsymptoticRow> out;
  for (double k : ks) {
    if (!(k > 1)) throw DomainError("asymptotic table needs k > 1 (log 1 = 0)");
    AsymptoticRow r{k, corkscrew_length(k), 2 * std::log(k), 0};
    r.ratio = r.corkscrew / r.two_log_k;
    out.push_back(r);
  }
  return out;
}

Grid parse_grid(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("grid must look like X=lo:hi:log[:count]");
  Grid g;
  g.name = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 2 || parts.size() > 4) throw ParseError("grid must look like X=lo:hi:log[:count]");
  double lo = 0, hi = 0;
  long count = 100;
  std::string kind = parts.size() >= 3 ? parts[2] : "log";
  try {
    std::size_t used = 0;
    lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("lo");
    hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("hi");
    if (parts.size() == 4) {
      count = std::stol(parts[3], &used);
      if (used != parts[3].size()) throw std::invalid_argument("count");
    }
  } catch (const std::exception&) {
    throw ParseError("bad number in grid '" + text + "'");
  }
  if (!(lo < hi) || count < 2) throw ParseError("grid needs lo < hi and at least 2 points");
  if (kind != "log" && kind != "lin") throw ParseError("grid spacing must be log or lin");
  if (kind == "log" && !(lo > 0)) throw ParseError("log grid needs lo > 0");
  for (long i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    double x = kind == "log" ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
    if (i == 0) x = lo;
    if (i == count - 1) x = hi;
    g.points.push_back(x);
  }
  return g;
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = {"gotothin", "relativethick", "intercusp", "core",
                                                 "thinarcs", "collar",        "isoperimetric"};
  return names;
}

std::string default_grid(const std::string& lemma) {
  if (lemma == "gotothin") return "N=3:1e8:log";
  if (lemma == "intercusp") return "N=2.1:1e8:log";
  if (lemma == "relativethick") return "k=10:1e60:log";
  if (lemma == "core" || lemma == "thinarcs") return "k=10:1e30:log";
  if (lemma == "collar") return "k=1e20:1e60:log";
  if (lemma == "isoperimetric") return "L=0.01:1e4:log";
  throw ParseError("unknown lemma '" + lemma + "'");
}

std::vector<SweepRow> sweep_lemma(const std::string& lemma, const Grid& grid) {
  std::vector<SweepRow> rows;
  if (lemma == "gotothin") {
    for (double N : grid.points) {
      const double t = thin_travel_cost(N);
      const double gap = thin_travel_gap(N);
      rows.push_back({"thin_travel_cost", N, t, std::log(N) - 1, gap > 0 && gap < 1});
    }
  } else if (lemma == "intercusp") {
    for (double N : grid.points) {
      const auto e = CuspExcursion::from_depth(N);
      const auto b = cusp_self_int_bounds(e);
      const double m = cusp_mutual_bound(e);
      const bool chain = b.lower <= b.exact && b.exact <= std::max(0.0, b.twice_root - 1) && b.twice_root - 1 <= N - 1;
      rows.push_back({"cusp_self_int_exact", N, static_cast<double>(b.exact), N - 1, chain});
      rows.push_back({"cusp_mutual_bound", N, m, 2 * N, m <= 2 * N});
    }
  } else if (lemma == "relativethick") {
    for (double k : grid.points) {
      const double lk = std::log(k);
      const bool pred = thick_bound_negligible(k);
      // The claim is made for k >= 10^48 only.
      rows.push_back({"thick_bound_negligible", k, 4 * lk * lk, std::pow(k, 0.1), k < 1e48 || pred});
    }
  } else if (lemma == "core") {
    for (double k : grid.points) {
      const double L = std::log(k);
      rows.push_back({"core_contradiction", k, 1.2 * L + 6, 1.6 * L - 2, core_contradiction(L) == (L > 20)});
    }
  } else if (lemma == "thinarcs") {
    for (double k : grid.points) {
      const double L = std::log(k);
      rows.push_back({"thinarcs_excess", k, 3 * (0.8 * L - 2), 2 * L + 4, thinarcs_excess(L) == (L > 25)});
    }
  } else if (lemma == "collar") {
    for (double k : grid.points) {
      const double lk = std::log(k);
      const CollarParams c{std::pow(k, -0.8)};
      const double cap = static_cast<double>(collar_winding_bound(c, lk + 2, lk + 2));
      rows.push_back({"collar_winding_bound", k, cap, std::pow(k, kDefaultBudgetExponent), collar_cap_below_budget(k)});
    }
  } else if (lemma == "isoperimetric") {
    for (double L : grid.points) {
      const double a = area_bound_from_boundary(L, false);
      const double just_inside = a * (1 - 1e-12);
      rows.push_back({"disk_area_bound", L, a, L * L, isoperimetric_check({L, just_inside, false})});
      rows.push_back({"punctured_area_bound", L, L, L, isoperimetric_check({L, L, true})});
    }
  } else {
    throw ParseError("unknown lemma '" + lemma + "'");
  }
  return rows;
}

}  // namespace corkscrew
