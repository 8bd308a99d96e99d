#include "ordseason/report_format.hpp"

#include "ordseason/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace ordseason {
namespace {

constexpr int kMinDecimals = 5;

std::vector<std::string> day_labels(int order) {
  static const std::array<const char*, 5> week{"Mo", "Tu", "We", "Th", "Fr"};
  std::vector<std::string> labels;
  for (int i = 0; i < order; ++i) {
    labels.emplace_back(order == 5 ? week[static_cast<std::size_t>(i)] : "d" + std::to_string(i));
  }
  return labels;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool all_scalars(const Json& j) {
  for (const auto& e : j) {
    if (!is_scalar(e)) return false;
  }
  return true;
}

void dump(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      out << format_real(j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      const bool flat = all_scalars(j);
      out << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out << ',';
        if (flat) {
          if (!first) out << ' ';
        } else {
          out << '\n' << inner;
        }
        dump(e, out, indent + 2);
        first = false;
      }
      if (!flat) out << '\n' << pad;
      out << ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      const bool flat = j.size() <= 3 && all_scalars(j);
      out << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ',';
        if (flat) {
          if (!first) out << ' ';
        } else {
          out << '\n' << inner;
        }
        out << Json(key).dump() << ": ";
        dump(value, out, indent + 2);
        first = false;
      }
      if (!flat) out << '\n' << pad;
      out << '}';
      return;
    }
    default:
      out << j.dump();
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

class CsvRows {
 public:
  CsvRows(std::ostream& out, const std::string& label) : out_(out), label_(csv_escape(label)) {}

  void add(std::string_view table, const std::string& row, const std::string& column, const std::string& value) {
    out_ << label_ << ',' << table << ',' << csv_escape(row) << ',' << csv_escape(column) << ',' << value << '\n';
  }
  void add(std::string_view table, const std::string& row, const std::string& column, double value) {
    add(table, row, column, format_real(value));
  }
  void add_count(std::string_view table, const std::string& row, const std::string& column, std::uint64_t value) {
    add(table, row, column, std::to_string(value));
  }

  void add_test(std::string_view table, const std::string& row, const TestOutcome& t) {
    add(table, row, "statistic", t.statistic);
    if (t.df) add_count(table, row, "df", static_cast<std::uint64_t>(*t.df));
    add(table, row, "p_value", t.p_value);
    add_count(table, row, "reject_10", t.reject_10);
    add_count(table, row, "reject_05", t.reject_05);
    add_count(table, row, "reject_01", t.reject_01);
    if (t.binomial) {
      add(table, row, "p_expected", t.binomial->p_expected);
      add(table, row, "p_observed", t.binomial->p_observed);
      add_count(table, row, "weeks", t.binomial->weeks);
      add(table, row, "p_lower", t.binomial->p_lower);
      add(table, row, "p_upper", t.binomial->p_upper);
    }
  }

 private:
  std::ostream& out_;
  std::string label_;
};

}  // namespace

std::string format_real(double value) {
  if (!std::isfinite(value)) throw InvalidInput("cannot serialize a non-finite number");
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  std::string s(buf.data(), end);
  const auto exp_pos = s.find('e');
  std::string mantissa = s.substr(0, exp_pos);
  const std::string exponent = exp_pos == std::string::npos ? "" : s.substr(exp_pos);
  auto dot = mantissa.find('.');
  if (dot == std::string::npos) {
    mantissa += '.';
    dot = mantissa.size() - 1;
  }
  const auto decimals = static_cast<int>(mantissa.size() - dot - 1);
  if (decimals < kMinDecimals) mantissa.append(static_cast<std::size_t>(kMinDecimals - decimals), '0');
  return mantissa + exponent;
}

std::string dump_json(const Json& value) {
  std::ostringstream out;
  dump(value, out, 0);
  out << '\n';
  return out.str();
}

void to_json(Json& j, const BinomialDetail& v) {
  j = Json{{"p_expected", v.p_expected}, {"p_observed", v.p_observed}, {"q_observed", 1.0 - v.p_observed},
           {"weeks", v.weeks},           {"p_lower", v.p_lower},       {"p_upper", v.p_upper},
           {"degenerate", v.degenerate}};
}

void from_json(const Json& j, BinomialDetail& v) {
  j.at("p_expected").get_to(v.p_expected);
  j.at("p_observed").get_to(v.p_observed);
  j.at("weeks").get_to(v.weeks);
  j.at("p_lower").get_to(v.p_lower);
  j.at("p_upper").get_to(v.p_upper);
  j.at("degenerate").get_to(v.degenerate);
}

void to_json(Json& j, const TestOutcome& v) {
  j = Json::object();
  j["statistic"] = v.statistic;
  j["df"] = v.df ? Json(*v.df) : Json(nullptr);
  j["p_value"] = v.p_value;
  j["stars"] = v.stars();
  j["reject_10"] = v.reject_10;
  j["reject_05"] = v.reject_05;
  j["reject_01"] = v.reject_01;
  j["expected"] = v.expected;
  j["low_expected"] = v.low_expected;
  j["observed"] = v.observed;
  j["binomial"] = v.binomial ? Json(*v.binomial) : Json(nullptr);
}

void from_json(const Json& j, TestOutcome& v) {
  j.at("statistic").get_to(v.statistic);
  v.df = j.at("df").is_null() ? std::nullopt : std::optional<int>(j.at("df").get<int>());
  j.at("p_value").get_to(v.p_value);
  j.at("reject_10").get_to(v.reject_10);
  j.at("reject_05").get_to(v.reject_05);
  j.at("reject_01").get_to(v.reject_01);
  j.at("expected").get_to(v.expected);
  j.at("low_expected").get_to(v.low_expected);
  j.at("observed").get_to(v.observed);
  v.binomial = j.at("binomial").is_null() ? std::nullopt
                                          : std::optional<BinomialDetail>(j.at("binomial").get<BinomialDetail>());
}

void to_json(Json& j, const HurstEstimate& v) {
  Json points = Json::array();
  for (const auto& [x, y] : v.fit_points) points.push_back(Json::array({x, y}));
  j = Json{{"h", v.h},
           {"method", std::string(to_string(v.method))},
           {"r_squared", v.r_squared},
           {"window_sizes", v.window_sizes},
           {"fit_points", points}};
}

void from_json(const Json& j, HurstEstimate& v) {
  j.at("h").get_to(v.h);
  const auto method = j.at("method").get<std::string>();
  if (method == "rs") {
    v.method = HurstMethod::RescaledRange;
  } else if (method == "dfa") {
    v.method = HurstMethod::Dfa;
  } else {
    throw InvalidInput("unknown Hurst method '" + method + "'");
  }
  j.at("r_squared").get_to(v.r_squared);
  j.at("window_sizes").get_to(v.window_sizes);
  v.fit_points.clear();
  for (const auto& p : j.at("fit_points")) v.fit_points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
}

void to_json(Json& j, const PatternCount& v) {
  j = Json{{"id", v.id}, {"pattern", v.pattern}, {"count", v.count}};
}

void from_json(const Json& j, PatternCount& v) {
  j.at("id").get_to(v.id);
  j.at("pattern").get_to(v.pattern);
  j.at("count").get_to(v.count);
}

void to_json(Json& j, const AnalysisReport& v) {
  j = Json::object();
  j["label"] = v.label;
  j["observations"] = v.observations;
  j["week_mode"] = v.week_mode;
  j["order"] = v.order;
  j["stride"] = v.stride;
  j["alpha"] = v.alpha;
  j["windows"] = v.windows;
  j["discarded_values"] = v.discarded_values;
  j["skipped_weeks"] = v.skipped_weeks;
  j["ties"] = Json{{"tied_windows", v.tied_windows}, {"tie_fraction", v.tie_fraction}, {"warning", v.tie_warning}};
  j["days"] = day_labels(v.order);
  j["position_matrix"] = v.position_matrix;
  j["day_rows"] = v.day_rows;
  j["position_columns"] = v.position_columns;
  j["pattern_uniformity"] = v.pattern_uniformity;
  j["monday_largest"] = v.monday_largest;
  j["monday_worst_friday_best"] = v.monday_worst_friday_best;
  j["hurst"] = v.hurst ? Json(*v.hurst) : Json(nullptr);
  j["patterns"] = v.patterns;
}

void from_json(const Json& j, AnalysisReport& v) {
  j.at("label").get_to(v.label);
  j.at("observations").get_to(v.observations);
  j.at("week_mode").get_to(v.week_mode);
  j.at("order").get_to(v.order);
  j.at("stride").get_to(v.stride);
  j.at("alpha").get_to(v.alpha);
  j.at("windows").get_to(v.windows);
  j.at("discarded_values").get_to(v.discarded_values);
  j.at("skipped_weeks").get_to(v.skipped_weeks);
  const auto& ties = j.at("ties");
  ties.at("tied_windows").get_to(v.tied_windows);
  ties.at("tie_fraction").get_to(v.tie_fraction);
  ties.at("warning").get_to(v.tie_warning);
  j.at("position_matrix").get_to(v.position_matrix);
  j.at("day_rows").get_to(v.day_rows);
  j.at("position_columns").get_to(v.position_columns);
  j.at("pattern_uniformity").get_to(v.pattern_uniformity);
  j.at("monday_largest").get_to(v.monday_largest);
  j.at("monday_worst_friday_best").get_to(v.monday_worst_friday_best);
  v.hurst = j.at("hurst").is_null() ? std::nullopt : std::optional<HurstEstimate>(j.at("hurst").get<HurstEstimate>());
  j.at("patterns").get_to(v.patterns);
}

void to_json(Json& j, const RejectionCounts& v) {
  j = Json{{"at_10", v.at_10}, {"at_05", v.at_05}, {"at_01", v.at_01}, {"at_alpha", v.at_alpha}};
}

void from_json(const Json& j, RejectionCounts& v) {
  j.at("at_10").get_to(v.at_10);
  j.at("at_05").get_to(v.at_05);
  j.at("at_01").get_to(v.at_01);
  j.at("at_alpha").get_to(v.at_alpha);
}

void to_json(Json& j, const ChiSquareSummary& v) {
  j = Json{{"rejections", v.rejections}, {"averaged", v.averaged}};
}

void from_json(const Json& j, ChiSquareSummary& v) {
  j.at("rejections").get_to(v.rejections);
  j.at("averaged").get_to(v.averaged);
}

void to_json(Json& j, const FamilySummary& v) {
  j = Json{{"p_expected", v.p_expected},
           {"mean_p_observed", v.mean_p_observed},
           {"mean_q_observed", 1.0 - v.mean_p_observed},
           {"above_expected", v.above_expected},
           {"rejections", v.rejections},
           {"averaged", v.averaged}};
}

void from_json(const Json& j, FamilySummary& v) {
  j.at("p_expected").get_to(v.p_expected);
  j.at("mean_p_observed").get_to(v.mean_p_observed);
  j.at("above_expected").get_to(v.above_expected);
  j.at("rejections").get_to(v.rejections);
  j.at("averaged").get_to(v.averaged);
}

void to_json(Json& j, const SimulationReport& v) {
  j = Json::object();
  j["hurst"] = v.hurst;
  j["length"] = v.length;
  j["replications"] = v.replications;
  j["master_seed"] = v.master_seed;
  j["order"] = v.order;
  j["alpha"] = v.alpha;
  j["sigma"] = v.sigma;
  j["weeks_per_sample"] = v.weeks_per_sample;
  j["z_weeks"] = v.z_weeks;
  j["tied_windows"] = v.tied_windows;
  j["pattern_uniformity"] = v.h1;
  j["day_rows"] = v.h2;
  j["position_columns"] = v.h3;
  j["monday_largest"] = v.h4;
  j["monday_worst_friday_best"] = v.h5;
}

void from_json(const Json& j, SimulationReport& v) {
  j.at("hurst").get_to(v.hurst);
  j.at("length").get_to(v.length);
  j.at("replications").get_to(v.replications);
  j.at("master_seed").get_to(v.master_seed);
  j.at("order").get_to(v.order);
  j.at("alpha").get_to(v.alpha);
  j.at("sigma").get_to(v.sigma);
  j.at("weeks_per_sample").get_to(v.weeks_per_sample);
  j.at("z_weeks").get_to(v.z_weeks);
  j.at("tied_windows").get_to(v.tied_windows);
  j.at("pattern_uniformity").get_to(v.h1);
  j.at("day_rows").get_to(v.h2);
  j.at("position_columns").get_to(v.h3);
  j.at("monday_largest").get_to(v.h4);
  j.at("monday_worst_friday_best").get_to(v.h5);
}

void write_csv_header(std::ostream& out) { out << "label,table,row,column,value\n"; }

void write_csv(std::ostream& out, const AnalysisReport& r) {
  CsvRows rows(out, r.label);
  rows.add_count("meta", "", "observations", r.observations);
  rows.add_count("meta", "", "windows", r.windows);
  rows.add_count("meta", "", "discarded_values", r.discarded_values);
  rows.add_count("meta", "", "skipped_weeks", r.skipped_weeks);
  rows.add_count("meta", "", "tied_windows", r.tied_windows);
  rows.add("meta", "", "tie_fraction", r.tie_fraction);

  const auto days = day_labels(r.order);
  for (std::size_t i = 0; i < r.position_matrix.size(); ++i) {
    for (std::size_t j = 0; j < r.position_matrix[i].size(); ++j) {
      rows.add_count("position", days[i], std::to_string(j), r.position_matrix[i][j]);
    }
  }
  for (std::size_t i = 0; i < r.day_rows.size(); ++i) rows.add_test("day_row", days[i], r.day_rows[i]);
  for (std::size_t j = 0; j < r.position_columns.size(); ++j) {
    rows.add_test("position_column", std::to_string(j), r.position_columns[j]);
  }
  rows.add_test("pattern_uniformity", "", r.pattern_uniformity);
  rows.add_test("monday_largest", "", r.monday_largest);
  rows.add_test("monday_worst_friday_best", "", r.monday_worst_friday_best);
  if (r.hurst) {
    rows.add("hurst", std::string(to_string(r.hurst->method)), "h", r.hurst->h);
    rows.add("hurst", std::string(to_string(r.hurst->method)), "r_squared", r.hurst->r_squared);
  }
  for (const auto& p : r.patterns) rows.add_count("pattern_count", std::to_string(p.id), p.pattern, p.count);
}

void write_simulation_csv_header(std::ostream& out) {
  out << "hurst,hypothesis,index,averaged_statistic,df,averaged_p_value,stars,"
         "rejections_10,rejections_05,rejections_01,rejections_alpha,mean_p_observed,above_expected\n";
}

void write_simulation_csv(std::ostream& out, const SimulationReport& r) {
  const std::string hurst = format_real(r.hurst);
  auto chi = [&](std::string_view name, std::size_t index, const ChiSquareSummary& s) {
    out << hurst << ',' << name << ',' << index << ',' << format_real(s.averaged.statistic) << ','
        << s.averaged.df.value_or(0) << ',' << format_real(s.averaged.p_value) << ',' << s.averaged.stars() << ','
        << s.rejections.at_10 << ',' << s.rejections.at_05 << ',' << s.rejections.at_01 << ','
        << s.rejections.at_alpha << ",,\n";
  };
  auto family = [&](std::string_view name, const FamilySummary& s) {
    out << hurst << ',' << name << ",0," << format_real(s.averaged.statistic) << ",," << format_real(s.averaged.p_value)
        << ',' << s.averaged.stars() << ',' << s.rejections.at_10 << ',' << s.rejections.at_05 << ','
        << s.rejections.at_01 << ',' << s.rejections.at_alpha << ',' << format_real(s.mean_p_observed) << ','
        << s.above_expected << '\n';
  };
  chi("pattern_uniformity", 0, r.h1);
  for (std::size_t i = 0; i < r.h2.size(); ++i) chi("day_row", i, r.h2[i]);
  for (std::size_t i = 0; i < r.h3.size(); ++i) chi("position_column", i, r.h3[i]);
  family("monday_largest", r.h4);
  family("monday_worst_friday_best", r.h5);
}

void write_histogram_csv(std::ostream& out, const AnalysisReport& report) {
  out << "pattern_id,pattern,count\n";
  for (const auto& p : report.patterns) out << p.id << ',' << p.pattern << ',' << p.count << '\n';
}

}  // namespace ordseason
