#pragma once

// Closed-form quantities for corkscrew curves, cusp excursions and collars,
// with the threshold predicates of their inequality chains.
//
// Doubles throughout. Threshold predicates are re-evaluated with 50 decimal
// digits when the double margin is within 1e-9 (relative) of flipping.

#include <string>
#include <vector>

#include "corkscrew/word.hpp"

namespace corkscrew {

// Exponent of k in the thick-part intersection budget k^e.
inline constexpr double kDefaultBudgetExponent = 0.9;

struct BoundParams {
  double k = 1;
  double a = 0.4;  // thinness exponent, 0 < a < 1
  void validate() const;
};

struct CuspExcursion {
  double N = 0;              // reciprocal injectivity radius at the apex
  double r = 0;              // lift radius 1 / (2 sinh(1/N))
  double strand_length = 0;  // 2 arccosh(r)
  double w = 0;              // winding number, informational

  // DomainError unless r > 1, i.e. N > 1 / arcsinh(1/2).
  static CuspExcursion from_depth(double N);
};

struct CollarParams {
  double core_length = 0;
};

struct IsoperimetricQuery {
  double boundary_length = 0;
  double area = 0;
  bool punctured = false;
};

// a^k b; DomainError if k < 1.
CyclicWord corkscrew_word(long k);
// 2 arccosh(2k + 1).
double corkscrew_length(double k);

// log(1 / sinh(1/N)); DomainError unless N > e.
double thin_travel_cost(double N);
// log N - thin_travel_cost(N) = log(sinh(x) / x), x = 1/N, without cancellation.
double thin_travel_gap(double N);

// (2 k^a log k)^2.
double relative_thick_bound(const BoundParams& p);
// 4 (log k)^2 < k^(exponent - 4/5), i.e. (2 k^(2/5) log k)^2 < k^exponent.
bool thick_bound_negligible(double k, double exponent = kDefaultBudgetExponent);

// (6/5) L + 6 < (8/5) L - 2 with L = log k; true iff L > 20.
bool core_contradiction(double log_k);
// 3 ((4/5) L - 2) > 2 L + 4; true iff L > 25.
bool thinarcs_excess(double log_k);

struct CuspBounds {
  long lower = 0;
  long exact = 0;
  long upper = 0;
  double twice_root = 0;  // 2 sqrt(r^2 - 1)
};

CuspBounds cusp_self_int_bounds(const CuspExcursion& e);
// 4 sqrt(r^2 - 1).
double cusp_mutual_bound(const CuspExcursion& e);
// max{n >= 1 : -r + n <= -r + 2 sqrt(r^2 - 1)} by stepping n upward; 0 if none.
long cusp_translate_max(const CuspExcursion& e);

// arcsinh(1 / sinh(l / 2)); DomainError if l <= 0.
double collar_half_width(const CollarParams& c);
// floor((la + lb) / ls) + 1.
long collar_winding_bound(const CollarParams& c, double la, double lb);
// floor(lb / ls) + 1, the cap on i(b, b).
long collar_self_winding_bound(const CollarParams& c, double lb);
// floor(2 + (la + lb) / ls).
long collar_returning_bound(const CollarParams& c, double la, double lb);
// Regime: core k^(-4/5), strands of total length 2 log k + 4.
// Compares 1 + k^(4/5) (2 log k + 4) with k^exponent.
bool collar_cap_below_budget(double k, double exponent = kDefaultBudgetExponent);

// Max area allowed by the applicable inequality: -2 pi + sqrt(4 pi^2 + L^2)
// for a disk, L for a once-punctured disk.
double area_bound_from_boundary(double L, bool punctured = false);
// A^2 + 4 pi A <= L^2 (disk) or A <= L (punctured).
bool isoperimetric_check(const IsoperimetricQuery& q);

// 2 arccosh(2k + 1) and the loose companion 2 log k + 4.
double max_curve_length(double k);
double max_curve_length_loose(double k);

struct AsymptoticRow {
  double k;
  double corkscrew;
  double two_log_k;
  double ratio;
};
// DomainError for k <= 1.
std::vector<AsymptoticRow> asymptotic_table(const std::vector<double>& ks);

struct SweepRow {
  std::string quantity;
  double parameter;
  double value;
  double bound;
  bool holds;
};

// Parameter grid "X=lo:hi:log[:count]" or "X=lo:hi:lin[:count]", count 100 by default.
struct Grid {
  std::string name;
  std::vector<double> points;
};
Grid parse_grid(const std::string& text);

// Known lemmas: gotothin, relativethick, intercusp, core, thinarcs, collar,
// isoperimetric. ParseError on anything else.
std::vector<SweepRow> sweep_lemma(const std::string& lemma, const Grid& grid);
const std::vector<std::string>& lemma_names();
// Grid used when none is given.
std::string default_grid(const std::string& lemma);

}  // namespace corkscrew
