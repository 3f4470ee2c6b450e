#include <algorithm>
#include <cmath>
#include <numbers>

#include "corkscrew/bounds.hpp"
#include "corkscrew/errors.hpp"
#include "corkscrew/geometry.hpp"
#include "doctest.h"

using namespace corkscrew;

TEST_CASE("corkscrew word and length") {
  CHECK(corkscrew_word(1) == parse_class("ab"));
  CHECK(corkscrew_word(3) == parse_class("aaab"));
  CHECK_THROWS_AS(corkscrew_word(0), DomainError);
  CHECK(corkscrew_length(1) == doctest::Approx(3.525494348078172).epsilon(1e-15));
  CHECK(corkscrew_length(2) == doctest::Approx(4.584863339122355).epsilon(1e-15));
  CHECK(corkscrew_length(10) == doctest::Approx(7.474204484397848).epsilon(1e-15));
  for (long k = 1; k <= 1000; ++k) {
    const double exact = geodesic_length(abs(represent(corkscrew_word(k)).trace()));
    CHECK(std::abs(corkscrew_length(static_cast<double>(k)) - exact) < 1e-12);
  }
  CHECK(std::abs(corkscrew_length(1e6) - 2 * std::log(1e6) - 2 * std::log(4.0)) < 1e-4);
}

TEST_CASE("thin travel cost") {
  CHECK(thin_travel_cost(10) == doctest::Approx(2.300918981530465).epsilon(1e-14));
  CHECK(thin_travel_cost(10) > std::log(10) - 1);
  CHECK(std::abs(thin_travel_cost(1e6) - std::log(1e6)) < 1e-6);
  CHECK(thin_travel_gap(1e8) == doctest::Approx(1.0 / 6e16));
  // Both branches agree where they meet.
  CHECK(thin_travel_gap(999.999) == doctest::Approx(thin_travel_gap(1000.001)).epsilon(1e-5));
  CHECK_THROWS_AS(thin_travel_cost(2), DomainError);
  CHECK_THROWS_AS(thin_travel_cost(std::numbers::e), DomainError);
  double prev_gap = INFINITY;
  for (const double N : parse_grid("N=2.72:1e8:log").points) {
    const double t = thin_travel_cost(N);
    const double gap = thin_travel_gap(N);
    CHECK(std::log(N) - 1 < t);
    CHECK(gap > 0);
    CHECK(gap < 1);
    CHECK(gap < prev_gap);
    CHECK(t + gap == doctest::Approx(std::log(N)).epsilon(1e-15));
    prev_gap = gap;
  }
}

TEST_CASE("relative thick bound and its budget predicate") {
  CHECK(relative_thick_bound({100, 0.4}) == doctest::Approx(std::pow(2 * std::pow(100, 0.4) * std::log(100), 2)));
  CHECK_THROWS_AS(relative_thick_bound({100, 1.0}), DomainError);
  CHECK_THROWS_AS(relative_thick_bound({0.5, 0.4}), DomainError);
  CHECK(relative_thick_bound({1000, 0.5}) > relative_thick_bound({1000, 0.4}));
  CHECK(relative_thick_bound({2000, 0.4}) > relative_thick_bound({1000, 0.4}));
  CHECK(thick_bound_negligible(1e48));
  CHECK(thick_bound_negligible(1e60));
  CHECK_FALSE(thick_bound_negligible(100));
  CHECK_FALSE(thick_bound_negligible(1e40));
  // Last flip sits between 10^46 and 10^47.
  CHECK_FALSE(thick_bound_negligible(1e46));
  CHECK(thick_bound_negligible(1e47));
  // Exponent is configurable: a larger budget flips sooner.
  CHECK(thick_bound_negligible(1e20, 1.0));
}

TEST_CASE("core and thin-arc thresholds") {
  CHECK_FALSE(core_contradiction(20));
  CHECK(core_contradiction(std::nextafter(20.0, 21.0)));
  CHECK_FALSE(core_contradiction(19.999));
  CHECK(core_contradiction(20.001));
  CHECK_FALSE(thinarcs_excess(25));
  CHECK(thinarcs_excess(std::nextafter(25.0, 26.0)));
  CHECK_FALSE(thinarcs_excess(24.9));
  CHECK(thinarcs_excess(26));
}

TEST_CASE("cusp excursion bounds") {
  auto e = CuspExcursion::from_depth(10);
  CHECK(e.r == doctest::Approx(4.9916763786480551).epsilon(1e-14));
  CHECK(std::cosh(e.strand_length / 2) == doctest::Approx(e.r).epsilon(1e-14));
  auto b = cusp_self_int_bounds(e);
  CHECK(b.twice_root == doctest::Approx(9.7809678599109944).epsilon(1e-14));
  CHECK(b.exact == 8);
  CHECK(b.upper == 9);
  CHECK(b.lower <= b.exact);
  CHECK(cusp_mutual_bound(e) == doctest::Approx(19.561935719821989).epsilon(1e-14));
  CHECK(cusp_mutual_bound(e) <= 20);
  CHECK(cusp_mutual_bound(CuspExcursion::from_depth(3)) == doctest::Approx(4.323861901241406).epsilon(1e-13));
  CHECK_THROWS_AS(CuspExcursion::from_depth(2.05), DomainError);
  CHECK_NOTHROW(CuspExcursion::from_depth(2.08));
  CHECK(cusp_self_int_bounds(CuspExcursion::from_depth(2.08)).exact == 0);
  double prev = 0;
  for (const double N : parse_grid("N=2.1:1e8:log").points) {
    auto x = CuspExcursion::from_depth(N);
    auto c = cusp_self_int_bounds(x);
    CHECK(c.lower <= c.exact);
    CHECK(c.exact <= std::max(0.0, c.twice_root - 1));
    CHECK(c.twice_root - 1 <= N - 1);
    CHECK(c.exact <= c.upper);
    CHECK(cusp_mutual_bound(x) <= 2 * N);
    CHECK(cusp_mutual_bound(x) > prev);
    prev = cusp_mutual_bound(x);
    if (c.twice_root >= 1) CHECK(cusp_translate_max(x) == c.exact + 1);
    else CHECK(cusp_translate_max(x) == 0);
  }
}

TEST_CASE("corkscrew lift radius") {
  // r = 2k + 1 for the corkscrew: floor(4 sqrt(k^2 + k)) - 1.
  CuspExcursion e;
  e.r = 11;
  CHECK(cusp_self_int_bounds(e).exact == 20);
}

TEST_CASE("collar widths and winding caps") {
  CHECK(collar_half_width({5}) == doctest::Approx(0.1645402180345878).epsilon(1e-14));
  CHECK(collar_half_width({1}) == doctest::Approx(1.4068291137472952).epsilon(1e-14));
  CHECK(collar_half_width({1e-8}) > 19);
  CHECK_THROWS_AS(collar_half_width({0}), DomainError);
  // l -> 2 arcsinh(1 / sinh(l / 2)) is an involution.
  for (double l : {0.1, 0.5, 1.0, 3.0, 5.0}) {
    const double w = 2 * collar_half_width({l});
    CHECK(2 * collar_half_width({w}) == doctest::Approx(l).epsilon(1e-12));
  }
  CHECK(collar_winding_bound({1}, 3, 3) == 7);
  CHECK(collar_self_winding_bound({1}, 3) == 4);
  CHECK(collar_returning_bound({1}, 3, 3) == 8);
  CHECK(collar_winding_bound({2}, 3, 3) < collar_winding_bound({1}, 3, 3));
  CHECK_THROWS_AS(collar_winding_bound({1}, 0, 3), DomainError);
  // At k = 10^6 the cap exceeds k^(9/10); the comparison only flips near log k = 45.5.
  CHECK_FALSE(collar_cap_below_budget(1e6));
  CHECK_FALSE(collar_cap_below_budget(std::exp(45.0)));
  CHECK(collar_cap_below_budget(std::exp(46.0)));
  CHECK(collar_cap_below_budget(1e30));
}

TEST_CASE("isoperimetric inequalities") {
  CHECK(isoperimetric_check({12, 12, true}));
  CHECK(isoperimetric_check({12, 11.9, true}));
  CHECK_FALSE(isoperimetric_check({12, 12.1, true}));
  CHECK(area_bound_from_boundary(12, true) == 12);
  CHECK_FALSE(isoperimetric_check({1, 1, false}));
  CHECK(isoperimetric_check({1, 1e-9, false}));
  for (double L : {0.01, 1.0, 12.0, 1000.0}) {
    const double a = area_bound_from_boundary(L);
    CHECK(a * a + 4 * std::numbers::pi * a == doctest::Approx(L * L).epsilon(1e-12));
    CHECK(a == doctest::Approx(-2 * std::numbers::pi + std::sqrt(4 * std::numbers::pi * std::numbers::pi + L * L)));
  }
}

TEST_CASE("maximal curve length and the loose bound") {
  CHECK(max_curve_length(1) == doctest::Approx(3.525494348078172));
  CHECK(max_curve_length(10) == doctest::Approx(7.474204484397848));
  CHECK(max_curve_length(1e7) < max_curve_length_loose(1e7));
  for (double k = 1; k < 1e12; k *= 3) CHECK(max_curve_length(k) < max_curve_length_loose(k));
}

TEST_CASE("asymptotic table") {
  auto rows = asymptotic_table({10, 100, 1e3, 1e6});
  CHECK(rows[0].ratio == doctest::Approx(1.6230028820952624).epsilon(1e-14));
  CHECK(std::abs(rows[3].ratio - 1) < 0.11);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio < rows[i - 1].ratio);
  CHECK_THROWS_AS(asymptotic_table({1}), DomainError);
}

TEST_CASE("grid parsing") {
  auto g = parse_grid("N=3:1e6:log");
  CHECK(g.name == "N");
  CHECK(g.points.size() == 100);
  CHECK(g.points.front() == 3);
  CHECK(g.points.back() == 1e6);
  CHECK(parse_grid("L=1:2:lin:3").points == std::vector<double>{1, 1.5, 2});
  CHECK_THROWS_AS(parse_grid("N3:1e6"), ParseError);
  CHECK_THROWS_AS(parse_grid("N=0:10:log"), ParseError);
  CHECK_THROWS_AS(parse_grid("N=5:1:log"), ParseError);
  CHECK_THROWS_AS(parse_grid("N=1:x:log"), ParseError);
}

TEST_CASE("lemma sweeps hold on their default grids") {
  for (const auto& lemma : lemma_names()) {
    auto rows = sweep_lemma(lemma, parse_grid(default_grid(lemma)));
    CHECK(!rows.empty());
    for (const auto& r : rows) CHECK_MESSAGE(r.holds, std::string(lemma + " fails at " + std::to_string(r.parameter)));
  }
  CHECK_THROWS_AS(sweep_lemma("nosuch", parse_grid("N=3:4:lin")), ParseError);
  // Below the flip the collar comparison is reported as failing, not hidden.
  auto low = sweep_lemma("collar", parse_grid("k=1e5:1e7:log:3"));
  for (const auto& r : low) CHECK_FALSE(r.holds);
}
