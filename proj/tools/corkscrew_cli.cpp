#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "corkscrew/bounds.hpp"
#include "corkscrew/errors.hpp"
#include "corkscrew/geometry.hpp"
#include "corkscrew/intersection.hpp"
#include "corkscrew/reduction.hpp"
#include "corkscrew/report.hpp"
#include "corkscrew/spectrum.hpp"

using namespace corkscrew;

namespace {

enum Exit { kOk = 0, kUsage = 2, kDegenerate = 3, kIntegrity = 4, kIncomplete = 5 };

int workers_from_env() {
  if (const char* s = std::getenv("CORKSCREW_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    std::cerr << "ignoring CORKSCREW_WORKERS='" << s << "'\n";
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int cmd_length(const std::string& text, OutputFormat fmt) {
  CyclicWord w = parse_class(text);
  const IntMatrix2 m = represent(w);
  const Integer tr = abs(m.trace());
  const bool cusp = is_peripheral(w);
  const bool prim = is_primitive(w);
  std::string type = cusp ? "parabolic (cusp class)" : (prim ? "hyperbolic" : "hyperbolic (non-primitive)");
  const bool hyperbolic = !cusp && classify(m) == Isometry::hyperbolic;
  if (fmt == OutputFormat::json) {
    nlohmann::json j{{"word", text}, {"class", w.str()}, {"trace", tr.get_str()}, {"type", type}};
    j["length"] = hyperbolic ? nlohmann::json::parse(sig17(geodesic_length(tr))) : nlohmann::json();
    std::cout << j.dump(2) << "\n";
  } else if (fmt == OutputFormat::csv) {
    std::cout << "word,class,trace,type,length\n"
              << text << "," << w.str() << "," << tr << "," << type << ","
              << (hyperbolic ? sig17(geodesic_length(tr)) : "") << "\n";
  } else {
    std::cout << "class   " << w.str() << "\n"
              << "trace   " << tr << "\n"
              << "type    " << type << "\n";
    if (hyperbolic) std::cout << "length  " << fixed6(geodesic_length(tr)) << "\n";
  }
  return cusp ? kDegenerate : kOk;
}

int cmd_selfint(const std::string& text, const std::string& method, double step, OutputFormat fmt) {
  GeodesicClass g = GeodesicClass::make(parse_class(text));
  std::vector<Method> methods;
  if (method == "all") {
    methods = {Method::combinatorial, Method::geometric, Method::numeric};
  } else {
    methods = {parse_method(method)};
  }
  std::vector<IntersectionResult> results;
  for (Method m : methods) {
    results.push_back(m == Method::numeric ? numeric_trace_count(g, step) : self_intersection(g, m));
    if (results.back().tolerance_warnings > 0)
      std::cerr << "warning: " << results.back().tolerance_warnings << " numeric crossing(s) within 10*step of a segment end\n";
  }
  bool agree = true;
  for (const auto& r : results) agree = agree && r.count == results.front().count;
  if (fmt == OutputFormat::json) {
    nlohmann::json j{{"class", g.word.str()}, {"agree", agree}, {"results", nlohmann::json::array()}};
    for (const auto& r : results) j["results"].push_back(to_json(r));
    std::cout << j.dump(2) << "\n";
  } else if (fmt == OutputFormat::csv) {
    std::cout << "class,method,count\n";
    for (const auto& r : results) std::cout << g.word.str() << "," << to_string(r.method) << "," << r.count << "\n";
  } else {
    std::cout << "class  " << g.word.str() << "\n";
    for (const auto& r : results) std::cout << to_string(r.method) << "  " << r.count << "\n";
  }
  if (!agree) {
    std::cerr << "methods disagree\n";
    return kIntegrity;
  }
  return kOk;
}

int cmd_mutual(const std::string& a, const std::string& b, OutputFormat fmt) {
  GeodesicClass g = GeodesicClass::make(parse_class(a));
  GeodesicClass h = GeodesicClass::make(parse_class(b));
  auto geo = mutual_int(g, h);
  auto comb = mutual_int_combinatorial(g.word, h.word);
  auto num = numeric_mutual_count(g, h);
  const bool agree = geo.count == comb.count && geo.count == num.count;
  if (fmt == OutputFormat::json) {
    std::cout << nlohmann::json{{"classes", {g.word.str(), h.word.str()}}, {"agree", agree},
                                {"results", {to_json(comb), to_json(geo), to_json(num)}}}
                     .dump(2)
              << "\n";
  } else {
    const char* sep = fmt == OutputFormat::csv ? "," : "  ";
    if (fmt == OutputFormat::csv) std::cout << "method,count\n";
    for (const auto* r : {&comb, &geo, &num}) std::cout << to_string(r->method) << sep << r->count << "\n";
  }
  return agree ? kOk : kIntegrity;
}

int cmd_spectrum(long k, const std::string& cutoff, int max_len, const std::string& method, bool require,
                 OutputFormat fmt) {
  SearchConfig cfg;
  cfg.max_word_length = max_len;
  cfg.method = parse_method(method);
  cfg.workers = workers_from_env();
  if (cutoff != "auto") {
    try {
      std::size_t used = 0;
      cfg.length_cutoff = std::stod(cutoff, &used);
      if (used != cutoff.size() || !(cfg.length_cutoff > 0)) throw std::invalid_argument(cutoff);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--cutoff", "expected 'auto' or a positive length");
    }
  }
  SpectrumEntry e = min_length_for(k, cfg, require);
  if (fmt == OutputFormat::csv) {
    std::cout << kSpectrumCsvHeader << "\n";
    for (const auto& row : spectrum_csv_rows(e)) std::cout << row << "\n";
  } else if (fmt == OutputFormat::json) {
    std::cout << to_json(e).dump(2) << "\n";
  } else {
    std::cout << "k           " << e.k << "\n"
              << "min_length  " << fixed6(e.min_length) << "\n"
              << "trace       " << e.trace << "\n"
              << "exhaustive  " << (e.exhaustive ? "true" : "false") << "\n"
              << "cutoff      " << fixed6(e.cutoff_used) << "\n"
              << "certificate " << e.certificate << "\n";
    for (const auto& w : e.witnesses)
      std::cout << "witness     " << w.word.str() << "  self_intersections " << *w.self_intersections << "\n";
  }
  return kOk;
}

std::pair<long, long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--k-range", "expected A..B");
  try {
    std::size_t u1 = 0, u2 = 0;
    std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    long lo = std::stol(a, &u1), hi = std::stol(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(s);
    if (lo < 1 || lo > hi) throw CLI::ValidationError("--k-range", "need 1 <= A <= B");
    return {lo, hi};
  } catch (const CLI::ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--k-range", "expected A..B with integers");
  }
}

int cmd_verify(const std::string& range, int max_len, OutputFormat fmt) {
  auto [lo, hi] = parse_range(range);
  SearchConfig cfg;
  cfg.max_word_length = max_len;
  cfg.workers = workers_from_env();
  auto verdicts = verify_corkscrew_optimality(lo, hi, cfg, true);
  if (fmt == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : verdicts) j.push_back(to_json(v, false));
    std::cout << j.dump(2) << "\n";
  } else if (fmt == OutputFormat::csv) {
    std::cout << "k,optimal,min_length,trace,corkscrew_length,witnesses,findings,exhaustive\n";
    for (const auto& v : verdicts) {
      std::string wit, fin;
      for (const auto& w : v.entry.witnesses) wit += (wit.empty() ? "" : " ") + w.word.str();
      for (const auto& w : v.findings) fin += (fin.empty() ? "" : " ") + w.str();
      std::cout << v.k << "," << (v.optimal ? "true" : "false") << "," << sig17(v.entry.min_length) << ","
                << v.entry.trace << "," << sig17(corkscrew_length(static_cast<double>(v.k))) << "," << wit << ","
                << fin << "," << (v.entry.exhaustive ? "true" : "false") << "\n";
    }
  } else {
    for (const auto& v : verdicts) {
      std::cout << "k=" << v.k << "  " << (v.optimal ? "corkscrew optimal" : "corkscrew NOT optimal")
                << "  min_length " << fixed6(v.entry.min_length) << "  trace " << v.entry.trace << "  witnesses";
      for (const auto& w : v.entry.witnesses) std::cout << " " << w.word.str();
      std::cout << "  findings";
      if (v.findings.empty()) std::cout << " none";
      for (const auto& w : v.findings) std::cout << " " << w.str();
      std::cout << "  (" << fixed6(v.seconds) << " s)\n";
    }
  }
  return kOk;
}

int cmd_bounds(const std::string& lemma, const std::string& grid_text, OutputFormat fmt) {
  const std::string spec = grid_text.empty() ? default_grid(lemma) : grid_text;
  auto rows = sweep_lemma(lemma, parse_grid(spec));
  bool all = true;
  if (fmt == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      all = all && r.holds;
      j.push_back({{"quantity", r.quantity},
                   {"parameter", nlohmann::json::parse(sig17(r.parameter))},
                   {"value", nlohmann::json::parse(sig17(r.value))},
                   {"bound", nlohmann::json::parse(sig17(r.bound))},
                   {"holds", r.holds}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << kSweepCsvHeader << "\n";
    for (const auto& r : rows) {
      all = all && r.holds;
      std::cout << sweep_csv_row(r) << "\n";
    }
  }
  if (!all) std::cerr << "some rows do not hold\n";
  return all ? kOk : kIntegrity;
}

int cmd_asymptotics(const std::string& list, OutputFormat fmt) {
  std::vector<double> ks;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      ks.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--k", "expected a comma-separated list of numbers");
    }
  }
  auto rows = asymptotic_table(ks);
  if (fmt == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
      j.push_back({{"k", nlohmann::json::parse(sig17(r.k))},
                   {"corkscrew_length", nlohmann::json::parse(sig17(r.corkscrew))},
                   {"two_log_k", nlohmann::json::parse(sig17(r.two_log_k))},
                   {"ratio", nlohmann::json::parse(sig17(r.ratio))}});
    std::cout << j.dump(2) << "\n";
  } else {
    const char* sep = fmt == OutputFormat::csv ? "," : "  ";
    std::cout << "k" << sep << "corkscrew_length" << sep << "two_log_k" << sep << "ratio\n";
    for (const auto& r : rows)
      std::cout << sig17(r.k) << sep << format_real(r.corkscrew, fmt) << sep << format_real(r.two_log_k, fmt) << sep
                << format_real(r.ratio, fmt) << "\n";
  }
  return kOk;
}

int cmd_stratum(int lo, int hi, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (int n = lo; n <= hi; ++n) {
      auto s = stratum_min_length(n);
      j.push_back({{"n", n}, {"trace", s.trace.get_str()}, {"length", nlohmann::json::parse(sig17(s.length))},
                   {"witness", s.witness.str()}});
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  const char* sep = fmt == OutputFormat::csv ? "," : "  ";
  std::cout << "n" << sep << "trace" << sep << "length" << sep << "witness\n";
  for (int n = lo; n <= hi; ++n) {
    auto s = stratum_min_length(n);
    std::cout << n << sep << s.trace << sep << format_real(s.length, fmt) << sep << s.witness.str() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed geodesics on the thrice-punctured sphere: lengths, self-intersections, short-curve search."};
  app.require_subcommand(1);
  std::string format = "human";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "human, csv or json")->check(CLI::IsMember({"human", "csv", "json"}));
  };

  std::string word, word2, method = "comb", cutoff = "auto", range, lemma, grid, klist = "10,100,1000,1e6";
  double step = 1e-7;
  long k = 0;
  int max_len = 20, n_lo = 2, n_hi = 12;
  bool require = false;

  auto* length = app.add_subcommand("length", "canonical form, trace and length of a class");
  length->add_option("word", word, "word over a, A, b, B")->required();
  add_format(length);

  auto* selfint = app.add_subcommand("selfint", "self-intersection number");
  selfint->add_option("word", word)->required();
  selfint->add_option("--method", method, "comb, geom, numeric or all")
      ->check(CLI::IsMember({"comb", "geom", "numeric", "all"}));
  selfint->add_option("--step", step, "numeric tolerance")->check(CLI::PositiveNumber);
  add_format(selfint);

  auto* mutual = app.add_subcommand("mutual", "intersection number of two distinct classes, all methods");
  mutual->add_option("first", word, "first class")->required();
  mutual->add_option("second", word2, "second class")->required();
  add_format(mutual);

  auto* spectrum = app.add_subcommand("spectrum", "shortest classes with at least k self-intersections");
  spectrum->add_option("--k", k, "threshold k >= 1")->required()->check(CLI::PositiveNumber);
  spectrum->add_option("--cutoff", cutoff, "'auto' (corkscrew length) or a length");
  spectrum->add_option("--max-word-length", max_len)->check(CLI::PositiveNumber);
  spectrum->add_option("--method", method, "comb, geom or numeric")->check(CLI::IsMember({"comb", "geom", "numeric"}));
  spectrum->add_flag("--require-exhaustive", require, "exit 5 unless every class below the cutoff was examined");
  add_format(spectrum);

  auto* verify = app.add_subcommand("verify", "corkscrew optimality for a range of k");
  verify->add_option("--k-range", range, "A..B")->required();
  verify->add_option("--max-word-length", max_len)->check(CLI::PositiveNumber);
  add_format(verify);

  auto* bounds = app.add_subcommand("bounds", "sweep a lemma's inequality chain over a grid (CSV)");
  bounds->add_option("--lemma", lemma)->required();
  bounds->add_option("--grid", grid, "X=lo:hi:log|lin[:count]");
  add_format(bounds);

  auto* asym = app.add_subcommand("asymptotics", "corkscrew length against 2 log k");
  asym->add_option("--k", klist, "comma-separated k values > 1");
  add_format(asym);

  auto* stratum = app.add_subcommand("stratum", "minimal length per word length");
  stratum->add_option("--from", n_lo)->check(CLI::Range(2, 64));
  stratum->add_option("--to", n_hi)->check(CLI::Range(2, 64));
  add_format(stratum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    if (*length) return cmd_length(word, fmt);
    if (*selfint) return cmd_selfint(word, method, step, fmt);
    if (*mutual) return cmd_mutual(word, word2, fmt);
    if (*spectrum) return cmd_spectrum(k, cutoff, max_len, method, require, fmt);
    if (*verify) return cmd_verify(range, max_len, fmt);
    if (*bounds) {
      const auto& names = lemma_names();
      if (std::find(names.begin(), names.end(), lemma) == names.end()) {
        std::cerr << "unknown lemma '" << lemma << "'\n";
        return kUsage;
      }
      return cmd_bounds(lemma, grid, fmt);
    }
    if (*asym) return cmd_asymptotics(klist, fmt);
    if (*stratum) {
      if (n_lo > n_hi) {
        std::cerr << "--from must not exceed --to\n";
        return kUsage;
      }
      return cmd_stratum(n_lo, n_hi, fmt);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IncompleteSearch& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return kIncomplete;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity: " << e.what() << "\n";
    return kIntegrity;
  } catch (const SharedAxis& e) {
    std::cerr << "integrity: " << e.what() << "\n";
    return kIntegrity;
  } catch (const EmptyClass& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kDegenerate;
  } catch (const DomainError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kDegenerate;
  }
  return kUsage;
}
