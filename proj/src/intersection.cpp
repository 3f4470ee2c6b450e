#include "corkscrew/intersection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "corkscrew/errors.hpp"

namespace corkscrew {

std::string to_string(Method m) {
  switch (m) {
    case Method::combinatorial: return "comb";
    case Method::geometric: return "geom";
    case Method::numeric: return "numeric";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "comb" || s == "combinatorial") return Method::combinatorial;
  if (s == "geom" || s == "geometric") return Method::geometric;
  if (s == "numeric") return Method::numeric;
  throw ParseError("unknown intersection method '" + s + "'");
}

const std::array<Letter, 4>& boundary_letter_order() {
  static const std::array<Letter, 4> order = [] {
    // Every end beginning with x lies in the cone of x, and so does the
    // attracting fixed point of a hyperbolic word beginning with x.
    std::array<std::pair<Letter, BoundaryPoint>, 4> probes = {{
        {kA, axis(represent(parse_letters("ab"))).attracting()},
        {kAInv, axis(represent(parse_letters("AB"))).attracting()},
        {kB, axis(represent(parse_letters("ba"))).attracting()},
        {kBInv, axis(represent(parse_letters("BA"))).attracting()},
    }};
    std::sort(probes.begin(), probes.end(),
              [](const auto& x, const auto& y) { return compare(x.second, y.second) < 0; });
    std::array<Letter, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = probes[i].first;
    return out;
  }();
  return order;
}

namespace {

std::array<int, 4> letter_positions() {
  std::array<int, 4> pos{};
  const auto& order = boundary_letter_order();
  for (int i = 0; i < 4; ++i) pos[order[static_cast<std::size_t>(i)].code()] = i;
  return pos;
}

}  // namespace

int compare_ends(const std::vector<Letter>& lhs, const std::vector<Letter>& rhs) {
  static const std::array<int, 4> pos = letter_positions();
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs[k] == rhs[k]) continue;
    int x = pos[lhs[k].code()];
    int y = pos[rhs[k].code()];
    if (k > 0) {
      // At a deeper vertex the subtrees are ordered starting just after the
      // edge leading back to the root.
      int back = pos[lhs[k - 1].inverse().code()];
      x = (x - back + 4) % 4;
      y = (y - back + 4) % 4;
    }
    return x < y ? -1 : 1;
  }
  throw IntegrityError("ends " + to_string(lhs) + "... and " + to_string(rhs) + "... agree on the whole horizon");
}

std::vector<Letter> forward_end(const CyclicWord& w, std::size_t i, std::size_t length) {
  const std::size_t n = w.size();
  std::vector<Letter> out(length);
  for (std::size_t k = 0; k < length; ++k) out[k] = w[(i + k) % n];
  return out;
}

std::vector<Letter> backward_end(const CyclicWord& w, std::size_t i, std::size_t length) {
  const std::size_t n = w.size();
  std::vector<Letter> out(length);
  for (std::size_t k = 0; k < length; ++k) out[k] = w[(i + n - 1 - (k % n)) % n].inverse();
  return out;
}

namespace {

void require_hyperbolic_class(const CyclicWord& w) {
  if (is_peripheral(w)) throw PeripheralInput("class " + w.str() + " is a cusp class");
  if (!is_primitive(w)) throw DomainError("class " + w.str() + " is not primitive");
}

struct LiftThroughBase {
  std::vector<Letter> fwd;
  std::vector<Letter> bwd;
};

std::vector<LiftThroughBase> lifts_through_base(const CyclicWord& w, std::size_t horizon) {
  std::vector<LiftThroughBase> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back({forward_end(w, i, horizon), backward_end(w, i, horizon)});
  return out;
}

bool linked(const LiftThroughBase& x, const LiftThroughBase& y) {
  const bool x_fwd_low = compare_ends(x.fwd, x.bwd) < 0;
  const auto& lo = x_fwd_low ? x.fwd : x.bwd;
  const auto& hi = x_fwd_low ? x.bwd : x.fwd;
  auto inside = [&](const std::vector<Letter>& e) { return compare_ends(lo, e) < 0 && compare_ends(e, hi) < 0; };
  return inside(y.fwd) != inside(y.bwd);
}

int shared_edges(const LiftThroughBase& x, const LiftThroughBase& y) {
  int shared = 0;
  for (Letter e : {x.fwd[0], x.bwd[0]})
    if (e == y.fwd[0] || e == y.bwd[0]) ++shared;
  return shared;
}

// Linked pairs of lifts meeting the base vertex, weighted so that a common
// segment of the two tree axes is counted once: 2 for a single common vertex,
// 1 at each end of a longer common segment, 0 in its interior.
long doubled_linked_weight(const LiftThroughBase& x, const LiftThroughBase& y) {
  int shared = shared_edges(x, y);
  if (shared == 2) return 0;
  if (!linked(x, y)) return 0;
  return shared == 0 ? 2 : 1;
}

}  // namespace

IntersectionResult self_int_combinatorial(const CyclicWord& w) {
  require_hyperbolic_class(w);
  const std::size_t horizon = 2 * w.size() + 4;
  auto lifts = lifts_through_base(w, horizon);
  IntersectionResult res;
  res.method = Method::combinatorial;
  long doubled = 0;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    for (std::size_t j = i + 1; j < lifts.size(); ++j) {
      long d = doubled_linked_weight(lifts[i], lifts[j]);
      if (d == 0) continue;
      doubled += d;
      res.certificate.push_back(std::to_string(i) + "," + std::to_string(j) + (d == 2 ? "" : "/2"));
    }
  }
  if (doubled % 2 != 0) throw IntegrityError("half-integral combinatorial count for " + w.str());
  res.count = doubled / 2;
  return res;
}

IntersectionResult mutual_int_combinatorial(const CyclicWord& g, const CyclicWord& h) {
  require_hyperbolic_class(g);
  require_hyperbolic_class(h);
  if (g == h) throw SameClass("mutual intersection of a class with itself");
  const std::size_t horizon = g.size() + h.size() + 4;
  auto lg = lifts_through_base(g, horizon);
  auto lh = lifts_through_base(h, horizon);
  IntersectionResult res;
  res.method = Method::combinatorial;
  long doubled = 0;
  for (std::size_t i = 0; i < lg.size(); ++i) {
    for (std::size_t j = 0; j < lh.size(); ++j) {
      long d = doubled_linked_weight(lg[i], lh[j]);
      if (d == 0) continue;
      doubled += d;
      res.certificate.push_back(std::to_string(i) + "," + std::to_string(j) + (d == 2 ? "" : "/2"));
    }
  }
  if (doubled % 2 != 0) throw IntegrityError("half-integral combinatorial count for " + g.str() + ", " + h.str());
  res.count = doubled / 2;
  return res;
}

namespace {

using FormKey = std::array<Integer, 3>;

FormKey key_of(const AxisGeodesic& x) { return {x.a, x.b, x.c}; }

std::vector<ReducedWord> proper_prefixes(const CyclicWord& w) {
  std::vector<ReducedWord> out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    out.push_back(reduce(std::span<const Letter>(w.letters().data(), t)));
  }
  return out;
}

struct Crossings {
  // Crossing lift -> shortest (then least) coset representative reaching it.
  std::map<FormKey, ReducedWord> lifts;
  std::map<FormKey, AxisGeodesic> axes;
  bool complete = true;
};

bool word_less(const ReducedWord& x, const ReducedWord& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x.letters() < y.letters();
}

// Lifts x * axis(h) of h crossing axis(g), x = P_t Q_s^-1 over proper
// prefixes P_t of g and Q_s of h. Every crossing double coset <g> x <h>
// meets this family: a common vertex of the two tree axes has the form
// g^m P_t = x h^m' Q_s.
Crossings crossing_lifts(const CyclicWord& g, const CyclicWord& h, int radius) {
  const AxisGeodesic base = axis(represent(g));
  const AxisGeodesic other = axis(represent(h));
  auto pg = proper_prefixes(g);
  auto ph = proper_prefixes(h);
  Crossings out;
  for (const auto& pt : pg) {
    for (const auto& qs : ph) {
      ReducedWord x = pt * qs.inverse();
      if (radius > 0 && x.size() > static_cast<std::size_t>(radius)) {
        out.complete = false;
        continue;
      }
      AxisGeodesic lift = moebius_image(represent(x.letters()), other);
      if (lift.same_geodesic(base)) continue;
      if (!axes_cross(base, lift)) continue;
      FormKey k = key_of(lift);
      auto it = out.lifts.find(k);
      if (it == out.lifts.end()) {
        out.lifts.emplace(k, x);
        out.axes.emplace(k, lift);
      } else if (word_less(x, it->second)) {
        it->second = x;
      }
    }
  }
  return out;
}

// Orbits of the crossing lifts under <g>; members of an orbit through base
// vertices of one period differ by g^m with |m| <= max_shift.
std::vector<std::vector<FormKey>> lift_orbits(const Crossings& c, const IntMatrix2& g, int max_shift) {
  std::map<FormKey, std::size_t> index;
  std::vector<FormKey> keys;
  for (const auto& [k, _] : c.lifts) {
    index.emplace(k, keys.size());
    keys.push_back(k);
  }
  std::vector<std::size_t> parent(keys.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  std::vector<IntMatrix2> shifts;
  IntMatrix2 acc = g;
  for (int m = 1; m <= max_shift; ++m) {
    shifts.push_back(acc);
    shifts.push_back(acc.inverse());
    acc = acc * g;
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const AxisGeodesic& lift = c.axes.at(keys[i]);
    for (const auto& s : shifts) {
      auto it = index.find(key_of(moebius_image(s, lift)));
      if (it != index.end()) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<FormKey>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) groups[find(i)].push_back(keys[i]);
  std::vector<std::vector<FormKey>> out;
  for (auto& [_, v] : groups) out.push_back(std::move(v));
  return out;
}

std::vector<std::string> orbit_certificate(const Crossings& c, const std::vector<std::vector<FormKey>>& orbits) {
  std::vector<ReducedWord> reps;
  for (const auto& orbit : orbits) {
    ReducedWord best = c.lifts.at(orbit.front());
    for (const auto& k : orbit)
      if (word_less(c.lifts.at(k), best)) best = c.lifts.at(k);
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(), word_less);
  std::vector<std::string> out;
  for (const auto& r : reps) out.push_back(r.empty() ? "1" : r.str());
  return out;
}

}  // namespace

IntersectionResult self_int_geometric(const GeodesicClass& g, int radius) {
  const CyclicWord& w = g.word;
  require_hyperbolic_class(w);
  Crossings c = crossing_lifts(w, w, radius);
  auto orbits = lift_orbits(c, represent(w), 2);
  if (orbits.size() % 2 != 0)
    throw IntegrityError("odd number of crossing double cosets for " + w.str());
  IntersectionResult res;
  res.method = Method::geometric;
  res.count = static_cast<long>(orbits.size() / 2);
  res.certificate = orbit_certificate(c, orbits);
  res.complete = c.complete;
  return res;
}

IntersectionResult mutual_int(const GeodesicClass& g, const GeodesicClass& h, int radius) {
  require_hyperbolic_class(g.word);
  require_hyperbolic_class(h.word);
  if (g.word == h.word) throw SameClass("mutual intersection of a class with itself");
  Crossings c = crossing_lifts(g.word, h.word, radius);
  const int max_shift = static_cast<int>(h.word.size() / g.word.size()) + 3;
  auto orbits = lift_orbits(c, represent(g.word), max_shift);
  IntersectionResult res;
  res.method = Method::geometric;
  res.count = static_cast<long>(orbits.size());
  res.certificate = orbit_certificate(c, orbits);
  res.complete = c.complete;
  return res;
}

IntersectionResult self_intersection(const GeodesicClass& g, Method m) {
  switch (m) {
    case Method::combinatorial: return self_int_combinatorial(g.word);
    case Method::geometric: return self_int_geometric(g);
    case Method::numeric: return numeric_trace_count(g);
  }
  throw IntegrityError("unknown method");
}

long self_int_geometric_ball(const GeodesicClass& g, int radius) {
  const CyclicWord& w = g.word;
  Crossings family = crossing_lifts(w, w, 0);
  const IntMatrix2 gm = represent(w);
  auto orbits = lift_orbits(family, gm, 2);
  std::map<FormKey, std::size_t> orbit_of;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (const auto& k : orbits[i]) orbit_of.emplace(k, i);

  const AxisGeodesic base = axis(gm);
  std::vector<char> hit(orbits.size(), 0);
  Letters buf;
  std::function<void(const IntMatrix2&)> visit = [&](const IntMatrix2& hm) {
    AxisGeodesic lift = moebius_image(hm, base);
    if (!lift.same_geodesic(base) && axes_cross(base, lift)) {
      // Slide the lift along axis(g) until it passes a base vertex of one period.
      const int reach = static_cast<int>(buf.size() / w.size()) + 3;
      bool found = false;
      IntMatrix2 fwd = IntMatrix2::identity();
      IntMatrix2 bwd = IntMatrix2::identity();
      for (int m = 0; m <= reach && !found; ++m) {
        for (const IntMatrix2* s : {&fwd, &bwd}) {
          auto it = orbit_of.find(key_of(moebius_image(*s, lift)));
          if (it != orbit_of.end()) {
            hit[it->second] = 1;
            found = true;
            break;
          }
        }
        fwd = fwd * gm;
        bwd = bwd * gm.inverse();
      }
      if (!found) throw IntegrityError("ball lift of " + w.str() + " via " + to_string(buf) + " escapes the prefix family");
    }
    if (static_cast<int>(buf.size()) == radius) return;
    for (Letter l : kAllLetters) {
      if (!buf.empty() && l == buf.back().inverse()) continue;
      buf.push_back(l);
      visit(hm * generator_matrix(l));
      buf.pop_back();
    }
  };
  visit(IntMatrix2::identity());
  long found = std::count(hit.begin(), hit.end(), 1);
  if (found % 2 != 0) throw IntegrityError("odd ball orbit count for " + w.str());
  return found / 2;
}

}  // namespace corkscrew
