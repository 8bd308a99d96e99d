#include "ordseason/ingest.hpp"

#include "ordseason/errors.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace ordseason {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\"");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

std::string read_plain(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_gzip(const std::filesystem::path& path) {
  gzFile file = gzopen(path.string().c_str(), "rb");
  if (file == nullptr) throw InvalidInput("cannot open " + path.string());
  std::string out;
  char buf[1 << 15];
  int n = 0;
  while ((n = gzread(file, buf, sizeof(buf))) > 0) out.append(buf, static_cast<std::size_t>(n));
  const bool failed = n < 0;
  gzclose(file);
  if (failed) throw InvalidInput("corrupt gzip stream in " + path.string());
  return out;
}

std::size_t find_column(const std::vector<std::string_view>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw SchemaError("missing column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

double parse_number(std::string_view text, std::size_t row, const std::string& column) {
  if (text.empty()) throw SchemaError("blank value in column '" + column + "'", row);
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw SchemaError("cannot parse '" + std::string(text) + "' in column '" + column + "'", row);
  }
  return value;
}

}  // namespace

void ReturnSeries::validate() const {
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidInput("series '" + label + "' holds a non-finite value");
  }
  if (!dates.empty()) {
    if (dates.size() != values.size()) throw InvalidInput("dates and values differ in length");
    for (std::size_t i = 1; i < dates.size(); ++i) {
      if (dates[i] <= dates[i - 1]) {
        throw OrderError("dates not strictly increasing at row " + std::to_string(i + 1) + " (" +
                         format_date(dates[i]) + ")");
      }
    }
  }
}

std::string format_date(Date date) {
  const std::chrono::year_month_day ymd{date};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

Date parse_date(std::string_view text) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  auto read = [&](auto& out, std::size_t digits) {
    if (static_cast<std::size_t>(end - p) < digits) return false;
    const auto [ptr, ec] = std::from_chars(p, p + digits, out);
    if (ec != std::errc() || ptr != p + digits) return false;
    p = ptr;
    return true;
  };
  const bool ok = read(y, 4) && p != end && *p++ == '-' && read(m, 2) && p != end && *p++ == '-' &&
                  read(d, 2) && p == end;
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ok || !ymd.ok()) throw InvalidInput("not an ISO date (YYYY-MM-DD): '" + std::string(text) + "'");
  return std::chrono::sys_days{ymd};
}

ReturnSeries parse_csv(std::string_view text, const CsvSchema& schema, std::string label) {
  const bool prices = !schema.price_column.empty();
  if (prices == !schema.return_column.empty()) {
    throw SchemaError("exactly one of the price and return columns must be named");
  }
  const std::string& value_column = prices ? schema.price_column : schema.return_column;

  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    auto pos = text.find('\n', start);
    if (pos == std::string_view::npos) pos = text.size();
    lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw InvalidInput("empty CSV input");

  std::string_view header_line = lines.front();
  if (header_line.starts_with("\xEF\xBB\xBF")) header_line.remove_prefix(3);
  const auto header = split(header_line, schema.delimiter);
  const std::size_t value_idx = find_column(header, value_column);
  const bool with_dates = !schema.date_column.empty();
  const std::size_t date_idx = with_dates ? find_column(header, schema.date_column) : 0;

  ReturnSeries series;
  series.label = std::move(label);
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const auto cells = split(lines[row], schema.delimiter);
    if (cells.size() != header.size()) {
      throw SchemaError("expected " + std::to_string(header.size()) + " fields, found " +
                            std::to_string(cells.size()),
                        row);
    }
    series.values.push_back(parse_number(cells[value_idx], row, value_column));
    if (with_dates) {
      try {
        series.dates.push_back(parse_date(cells[date_idx]));
      } catch (const InvalidInput& e) {
        throw SchemaError(e.what(), row);
      }
    }
  }
  if (series.values.empty()) throw InvalidInput("CSV input has a header but no data rows");
  series.validate();
  return series;
}

ReturnSeries load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  if (!std::filesystem::exists(path)) throw InvalidInput("no such file: " + path.string());
  const std::string text = path.extension() == ".gz" ? read_gzip(path) : read_plain(path);
  std::string label = path.filename().string();
  if (label.ends_with(".gz")) label.resize(label.size() - 3);
  return parse_csv(text, schema, std::move(label));
}

ReturnSeries log_returns(const ReturnSeries& prices) {
  if (prices.size() < 2) throw InvalidInput("log returns need at least two prices");
  ReturnSeries out;
  out.label = prices.label;
  out.values.reserve(prices.size() - 1);
  for (std::size_t i = 0; i < prices.size(); ++i) {
    if (!(prices.values[i] > 0.0)) {
      throw InvalidInput("non-positive price at row " + std::to_string(i + 1));
    }
    if (i > 0) out.values.push_back(std::log(prices.values[i] / prices.values[i - 1]));
  }
  if (prices.has_dates()) out.dates.assign(prices.dates.begin() + 1, prices.dates.end());
  return out;
}

SubperiodSpec SubperiodSpec::parse(std::string_view text) {
  SubperiodSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto pos = text.find(',', start);
    if (pos == std::string_view::npos) pos = text.size();
    const auto piece = trim(text.substr(start, pos - start));
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), n);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || n == 0) {
      throw InvalidInput("subperiod lengths must be positive integers: '" + std::string(text) + "'");
    }
    spec.lengths.push_back(n);
    start = pos + 1;
  }
  return spec;
}

std::vector<ReturnSeries> split_subperiods(const ReturnSeries& series, const SubperiodSpec& spec) {
  std::size_t total = 0;
  for (std::size_t n : spec.lengths) {
    if (n == 0) throw InvalidInput("subperiod lengths must be positive");
    total += n;
  }
  if (spec.lengths.empty() || total != series.size()) {
    throw InvalidInput("subperiod lengths sum to " + std::to_string(total) + " but the series has " +
                       std::to_string(series.size()) + " values");
  }
  std::vector<ReturnSeries> parts;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < spec.lengths.size(); ++k) {
    const std::size_t n = spec.lengths[k];
    ReturnSeries part;
    part.label = series.label + "#" + std::to_string(k + 1);
    part.values.assign(series.values.begin() + static_cast<std::ptrdiff_t>(offset),
                       series.values.begin() + static_cast<std::ptrdiff_t>(offset + n));
    if (series.has_dates()) {
      part.dates.assign(series.dates.begin() + static_cast<std::ptrdiff_t>(offset),
                        series.dates.begin() + static_cast<std::ptrdiff_t>(offset + n));
    }
    parts.push_back(std::move(part));
    offset += n;
  }
  return parts;
}

ReturnSeries shuffle_series(const ReturnSeries& series, std::uint64_t seed) {
  if (series.size() < 2) throw InvalidInput("shuffling needs at least two values");
  ReturnSeries out;
  out.label = series.label + "(shuffled,seed=" + std::to_string(seed) + ")";
  out.values = series.values;
  std::mt19937_64 rng(seed);
  for (std::size_t i = out.values.size() - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(out.values[i], out.values[pick(rng)]);
  }
  return out;
}

CalendarWeeks calendar_weeks(const ReturnSeries& series) {
  if (!series.has_dates()) throw InvalidInput("calendar weeks need a date column");
  using std::chrono::days;
  using std::chrono::weekday;
  CalendarWeeks out;
  std::size_t i = 0;
  while (i < series.size()) {
    const Date date = series.dates[i];
    const unsigned iso = weekday{date}.iso_encoding();  // Monday = 1
    if (iso > 5) {
      throw RejectedRow("weekend date " + format_date(date) + " in daily weekday data", i + 1);
    }
    const Date monday = date - days{iso - 1};
    std::size_t j = i;
    while (j < series.size() && series.dates[j] - monday < days{7}) {
      if (weekday{series.dates[j]}.iso_encoding() > 5) {
        throw RejectedRow("weekend date " + format_date(series.dates[j]) + " in daily weekday data", j + 1);
      }
      ++j;
    }
    // Dates are strictly increasing, so five weekday entries are Mon..Fri.
    if (j - i == 5) {
      out.values.insert(out.values.end(), series.values.begin() + static_cast<std::ptrdiff_t>(i),
                        series.values.begin() + static_cast<std::ptrdiff_t>(j));
      out.mondays.push_back(monday);
    } else {
      ++out.skipped_weeks;
    }
    i = j;
  }
  return out;
}

}  // namespace ordseason
