#pragma once

#include "ordseason/analysis.hpp"
#include "ordseason/simulation.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

namespace ordseason {

// Insertion-ordered, so serialized key order is stable.
using Json = nlohmann::ordered_json;

// Shortest round-trip representation, padded so that at least five digits
// follow the decimal point ("0.5" -> "0.50000", "1e-20" -> "1.00000e-20").
std::string format_real(double value);

// Pretty-printed JSON with reals rendered by format_real. Arrays of scalars
// stay on one line.
std::string dump_json(const Json& value);

void to_json(Json& j, const BinomialDetail& v);
void from_json(const Json& j, BinomialDetail& v);
void to_json(Json& j, const TestOutcome& v);
void from_json(const Json& j, TestOutcome& v);
void to_json(Json& j, const HurstEstimate& v);
void from_json(const Json& j, HurstEstimate& v);
void to_json(Json& j, const PatternCount& v);
void from_json(const Json& j, PatternCount& v);
void to_json(Json& j, const AnalysisReport& v);
void from_json(const Json& j, AnalysisReport& v);
void to_json(Json& j, const RejectionCounts& v);
void from_json(const Json& j, RejectionCounts& v);
void to_json(Json& j, const ChiSquareSummary& v);
void from_json(const Json& j, ChiSquareSummary& v);
void to_json(Json& j, const FamilySummary& v);
void from_json(const Json& j, FamilySummary& v);
void to_json(Json& j, const SimulationReport& v);
void from_json(const Json& j, SimulationReport& v);

// Tidy long format: label,table,row,column,value. One line per number.
void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const AnalysisReport& report);

// One line per hypothesis cell of each ensemble.
void write_simulation_csv_header(std::ostream& out);
void write_simulation_csv(std::ostream& out, const SimulationReport& report);

// pattern_id,pattern,count for plotting the pattern histogram.
void write_histogram_csv(std::ostream& out, const AnalysisReport& report);

}  // namespace ordseason
