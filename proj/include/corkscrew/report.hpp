#pragma once

// Text, CSV and JSON renderings shared by the command-line tool and tests.

#include "json.hpp"
#include <string>
#include <vector>

#include "corkscrew/bounds.hpp"
#include "corkscrew/intersection.hpp"
#include "corkscrew/spectrum.hpp"

namespace corkscrew {

enum class OutputFormat { human, csv, json };
OutputFormat parse_format(const std::string& s);

// Six decimals (human) or 17 significant digits (csv, json).
std::string format_real(double x, OutputFormat f);
std::string fixed6(double x);
std::string sig17(double x);

inline constexpr const char* kSpectrumCsvHeader = "k,min_length,trace,witness_word,self_intersections,exhaustive,cutoff";
inline constexpr const char* kSweepCsvHeader = "quantity,parameter,value,bound,holds";

// One CSV row per tied witness.
std::vector<std::string> spectrum_csv_rows(const SpectrumEntry& e);
nlohmann::json to_json(const SpectrumEntry& e);
nlohmann::json to_json(const IntersectionResult& r);
nlohmann::json to_json(const OptimalityVerdict& v, bool with_runtime);
std::string sweep_csv_row(const SweepRow& r);

}  // namespace corkscrew
