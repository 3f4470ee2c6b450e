#include "corkscrew/report.hpp"

#include <cstdio>

#include "corkscrew/errors.hpp"

namespace corkscrew {

OutputFormat parse_format(const std::string& s) {
  if (s == "human") return OutputFormat::human;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ParseError("unknown format '" + s + "' (human, csv, json)");
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string sig17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_real(double x, OutputFormat f) { return f == OutputFormat::human ? fixed6(x) : sig17(x); }

std::vector<std::string> spectrum_csv_rows(const SpectrumEntry& e) {
  std::vector<std::string> rows;
  for (const auto& w : e.witnesses) {
    rows.push_back(std::to_string(e.k) + "," + sig17(w.length) + "," + w.trace.get_str() + "," + w.word.str() + "," +
                   std::to_string(w.self_intersections.value_or(-1)) + "," + (e.exhaustive ? "true" : "false") + "," +
                   sig17(e.cutoff_used));
  }
  return rows;
}

namespace {

// Doubles go through their 17-digit text form so JSON output is stable.
nlohmann::json real(double x) { return nlohmann::json::parse(sig17(x)); }

}  // namespace

nlohmann::json to_json(const SpectrumEntry& e) {
  nlohmann::json j;
  j["k"] = e.k;
  j["min_length"] = real(e.min_length);
  j["trace"] = e.trace.get_str();
  j["exhaustive"] = e.exhaustive;
  j["cutoff"] = real(e.cutoff_used);
  j["examined"] = e.examined;
  j["certificate"] = e.certificate;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : e.witnesses) {
    j["witnesses"].push_back({{"witness_word", w.word.str()},
                              {"trace", w.trace.get_str()},
                              {"length", real(w.length)},
                              {"self_intersections", w.self_intersections.value_or(-1)}});
  }
  j["orbit"] = nlohmann::json::array();
  for (const auto& w : e.witness_orbit) j["orbit"].push_back(w.str());
  return j;
}

nlohmann::json to_json(const IntersectionResult& r) {
  return {{"method", to_string(r.method)},
          {"count", r.count},
          {"complete", r.complete},
          {"tolerance_warnings", r.tolerance_warnings},
          {"certificate", r.certificate}};
}

nlohmann::json to_json(const OptimalityVerdict& v, bool with_runtime) {
  nlohmann::json j = to_json(v.entry);
  j["optimal"] = v.optimal;
  j["findings"] = nlohmann::json::array();
  for (const auto& w : v.findings) j["findings"].push_back(w.str());
  if (with_runtime) j["seconds"] = v.seconds;
  return j;
}

std::string sweep_csv_row(const SweepRow& r) {
  return r.quantity + "," + sig17(r.parameter) + "," + sig17(r.value) + "," + sig17(r.bound) + "," +
         (r.holds ? "true" : "false");
}

}  // namespace corkscrew
