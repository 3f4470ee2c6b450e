#include "corkscrew/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "corkscrew/bounds.hpp"
#include "corkscrew/errors.hpp"
#include "corkscrew/reduction.hpp"

namespace corkscrew {

Integer max_trace_for_length(double L) {
  if (!(L > 0)) throw DomainError("length cutoff must be positive");
  // 2 cosh(L/2) is the trace at length L; fix up the rounding both ways.
  Integer t(std::floor(2 * std::cosh(L / 2)));
  auto fits = [L](const Integer& x) { return x <= 2 || geodesic_length(x) <= L + 1e-12; };
  while (!fits(t)) --t;
  while (fits(Integer(t + 1))) ++t;
  return t < 2 ? Integer(2) : t;
}

Census enumerate_geodesics(const SearchConfig& cfg) {
  if (!(cfg.length_cutoff > 0)) throw DomainError("enumerate_geodesics needs a positive length cutoff");
  if (cfg.max_word_length < 1) throw DomainError("max_word_length must be positive");
  Census c;
  c.max_trace = max_trace_for_length(cfg.length_cutoff);
  for (auto& g : classes_up_to_trace(c.max_trace)) {
    c.longest_word = std::max(c.longest_word, g.word.size());
    if (g.word.size() <= static_cast<std::size_t>(cfg.max_word_length)) c.classes.push_back(std::move(g));
  }
  c.exhaustive = c.longest_word <= static_cast<std::size_t>(cfg.max_word_length);
  return c;
}

std::vector<long> parallel_self_intersections(const std::vector<GeodesicClass>& classes, Method m, int workers) {
  std::vector<long> out(classes.size(), 0);
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  std::vector<std::exception_ptr> errors(w);
  auto job = [&](std::size_t id) {
    try {
      for (std::size_t i = id; i < classes.size(); i += w) out[i] = self_intersection(classes[i], m).count;
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (w == 1 || classes.size() < 2) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t id = 0; id < w; ++id) pool.emplace_back(job, id);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

SpectrumEntry min_length_for(long k, const SearchConfig& cfg, bool require_exhaustive) {
  if (k < 1) throw DomainError("k must be >= 1");
  const double floor_len = corkscrew_length(static_cast<double>(k));
  SearchConfig run = cfg;
  if (!(run.length_cutoff > 0)) run.length_cutoff = floor_len;
  if (run.length_cutoff < floor_len - 1e-12)
    throw DomainError("cutoff " + std::to_string(run.length_cutoff) + " is below the corkscrew length for k = " +
                      std::to_string(k));
  Census census = enumerate_geodesics(run);
  if (require_exhaustive && !census.exhaustive)
    throw IncompleteSearch("classes up to trace " + census.max_trace.get_str() + " need words of length " +
                           std::to_string(census.longest_word) + " > max_word_length " +
                           std::to_string(run.max_word_length));

  SpectrumEntry entry;
  entry.k = k;
  entry.exhaustive = census.exhaustive;
  entry.cutoff_used = run.length_cutoff;
  entry.certificate = "trace census <= " + census.max_trace.get_str() + ": " + std::to_string(census.classes.size()) +
                      " classes, longest word " + std::to_string(census.longest_word) + (census.exhaustive ? " <= " : " > ") +
                      "max_word_length " + std::to_string(run.max_word_length);

  auto& cls = census.classes;
  std::size_t lo = 0;
  while (lo < cls.size()) {
    std::size_t hi = lo;
    while (hi < cls.size() && cls[hi].trace == cls[lo].trace) ++hi;
    std::vector<GeodesicClass> group(cls.begin() + static_cast<std::ptrdiff_t>(lo),
                                     cls.begin() + static_cast<std::ptrdiff_t>(hi));
    auto counts = parallel_self_intersections(group, run.method, run.workers);
    entry.examined += group.size();
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (counts[i] < k) continue;
      group[i].self_intersections = counts[i];
      entry.witnesses.push_back(group[i]);
    }
    if (!entry.witnesses.empty()) break;
    lo = hi;
  }
  if (entry.witnesses.empty())
    throw IncompleteSearch("no examined class reaches " + std::to_string(k) + " self-intersections");

  // Confirm the minimizers with the geometric count.
  if (run.method != Method::geometric) {
    auto geo = parallel_self_intersections(entry.witnesses, Method::geometric, run.workers);
    for (std::size_t i = 0; i < geo.size(); ++i)
      if (geo[i] != *entry.witnesses[i].self_intersections)
        throw IntegrityError("methods disagree on " + entry.witnesses[i].word.str());
  }
  entry.trace = entry.witnesses.front().trace;
  entry.min_length = entry.witnesses.front().length;
  entry.witness_orbit = puncture_symmetry_orbit(entry.witnesses.front().word);
  return entry;
}

std::vector<OptimalityVerdict> verify_corkscrew_optimality(long k_lo, long k_hi, const SearchConfig& cfg,
                                                           bool require_exhaustive) {
  std::vector<OptimalityVerdict> out;
  for (long k = k_lo; k <= k_hi; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    OptimalityVerdict v;
    v.k = k;
    SearchConfig run = cfg;
    run.length_cutoff = 0;
    v.entry = min_length_for(k, run, require_exhaustive);
    const CyclicWord cork = corkscrew_word(k);
    const auto orbit = puncture_symmetry_orbit(cork);
    bool has_cork = false;
    for (const auto& w : v.entry.witnesses) {
      if (w.word == cork) has_cork = true;
      if (std::find(orbit.begin(), orbit.end(), w.word) == orbit.end()) v.findings.push_back(w.word);
    }
    v.optimal = has_cork && v.entry.trace == 4 * k + 2;
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace corkscrew
