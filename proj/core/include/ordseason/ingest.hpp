#pragma once

#include "ordseason/series.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ordseason {

// Which columns of a headed CSV file to read. Exactly one of price_column and
// return_column must be set; date_column is optional.
struct CsvSchema {
  std::string date_column;
  std::string price_column;
  std::string return_column;
  char delimiter = ',';
};

// Reads a comma-separated file with a header row ('.' decimal separator).
// Files ending in .gz are decompressed transparently. The result holds the
// selected column's values (prices or returns) in file order.
//
// Errors: SchemaError (missing column, unparseable or blank cell; carries the
// 1-based data row), OrderError (dates not strictly increasing),
// InvalidInput (no data rows, unreadable file).
ReturnSeries load_csv(const std::filesystem::path& path, const CsvSchema& schema);
ReturnSeries parse_csv(std::string_view text, const CsvSchema& schema, std::string label = {});

// r_t = ln(P_t / P_{t-1}); dates move to the later day.
ReturnSeries log_returns(const ReturnSeries& prices);

struct SubperiodSpec {
  std::vector<std::size_t> lengths;

  // "3050,3050,3050,3050,1350"
  static SubperiodSpec parse(std::string_view text);
};

// Contiguous slices; labels get a "#k" suffix (1-based).
std::vector<ReturnSeries> split_subperiods(const ReturnSeries& series, const SubperiodSpec& spec);

// Fisher-Yates permutation of the values. Dates are dropped.
ReturnSeries shuffle_series(const ReturnSeries& series, std::uint64_t seed);

struct CalendarWeeks {
  std::vector<double> values;  // 5 per week, Monday..Friday
  std::vector<Date> mondays;
  std::size_t skipped_weeks = 0;  // weeks missing at least one weekday

  std::size_t weeks() const noexcept { return mondays.size(); }
};

// Groups returns by ISO week and keeps the weeks with all five weekdays.
// Throws InvalidInput without dates and RejectedRow for weekend dates.
CalendarWeeks calendar_weeks(const ReturnSeries& series);

Date parse_date(std::string_view text);

}  // namespace ordseason
