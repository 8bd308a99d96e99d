#include "ordseason/analysis.hpp"
#include "ordseason/errors.hpp"
#include "ordseason/ingest.hpp"
#include "ordseason/report_format.hpp"
#include "ordseason/simulation.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <regex>
#include <sstream>

using namespace ordseason;

namespace {

AnalysisReport fixture_report() {
  const auto series = load_csv(ORDSEASON_TEST_DATA_DIR "/nyse_returns_fixture.csv", {.return_column = "return"});
  return analyze_series(series);
}

// Every token with a decimal point must carry at least five fractional digits.
void expect_five_decimals(const std::string& text) {
  static const std::regex real(R"((-?\d+)\.(\d+)([eE][-+]?\d+)?)");
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), real); it != std::sregex_iterator(); ++it) {
    EXPECT_GE((*it)[2].length(), 5) << it->str();
    ++seen;
  }
  EXPECT_GT(seen, 0u);
}

}  // namespace

TEST(FormatReal, PadsToFiveDecimalsAndRoundTrips) {
  EXPECT_EQ(format_real(0.5), "0.50000");
  EXPECT_EQ(format_real(3.0), "3.00000");
  EXPECT_EQ(format_real(-2.25), "-2.25000");
  EXPECT_EQ(format_real(22.789667896678967), "22.789667896678967");
  EXPECT_EQ(format_real(1e-20), "1.00000e-20");
  for (double v : {0.1, 1.0 / 3.0, 2.5e-300, 6.02e23, -0.0001234}) EXPECT_EQ(std::stod(format_real(v)), v);
  EXPECT_THROW(format_real(std::numeric_limits<double>::quiet_NaN()), InvalidInput);
}

TEST(AnalysisJson, RoundTripsExactly) {
  const auto report = fixture_report();
  const std::string text = dump_json(Json(report));
  EXPECT_EQ(Json::parse(text).get<AnalysisReport>(), report);
  expect_five_decimals(text);
}

TEST(AnalysisJson, KeyOrderIsStable) {
  const std::string text = dump_json(Json(fixture_report()));
  EXPECT_LT(text.find("\"label\""), text.find("\"position_matrix\""));
  EXPECT_LT(text.find("\"position_matrix\""), text.find("\"patterns\""));
  EXPECT_EQ(text, dump_json(Json::parse(text)));
}

TEST(SimulationJson, RoundTripsExactly) {
  EnsembleConfig cfg;
  cfg.base.hurst = 0.3;
  cfg.base.length = 2000;
  cfg.replications = 8;
  cfg.master_seed = 5;
  const auto report = run_ensemble(cfg);
  const std::string text = dump_json(Json(report));
  EXPECT_EQ(Json::parse(text).get<SimulationReport>(), report);
  expect_five_decimals(text);
}

TEST(AnalysisCsv, CarriesTheSameNumbers) {
  const auto report = fixture_report();
  std::ostringstream csv;
  write_csv_header(csv);
  write_csv(csv, report);
  const std::string text = csv.str();
  EXPECT_EQ(text.rfind("label,table,row,column,value\n", 0), 0u);
  EXPECT_NE(text.find("position,Mo,0,637\n"), std::string::npos);
  EXPECT_NE(text.find("day_row,Mo,statistic," + format_real(report.day_rows[0].statistic) + "\n"), std::string::npos);
  EXPECT_NE(text.find("position_column,0,statistic," + format_real(report.position_columns[0].statistic) + "\n"),
            std::string::npos);
  expect_five_decimals(text);
}

TEST(HistogramCsv, OneLinePerPattern) {
  std::ostringstream csv;
  write_histogram_csv(csv, fixture_report());
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 121);
  EXPECT_EQ(text.rfind("pattern_id,pattern,count\n1,01234,", 0), 0u);
}
