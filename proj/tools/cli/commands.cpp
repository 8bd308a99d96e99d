#include "cli/commands.hpp"

#include "ordseason/analysis.hpp"
#include "ordseason/errors.hpp"
#include "ordseason/fgn.hpp"
#include "ordseason/hurst.hpp"
#include "ordseason/ingest.hpp"
#include "ordseason/parallel.hpp"
#include "ordseason/report_format.hpp"
#include "ordseason/simulation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ordseason::cli {
namespace {

// Bad flag values that CLI11 cannot check on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };

struct InputFlags {
  std::string input;
  std::string column;
  std::string price_column;
  std::string date_column;
  std::string subperiods;

  void attach(CLI::App* cmd, bool required) {
    auto* in = cmd->add_option("--input", input, "CSV file (optionally .gz) with a header row");
    if (required) in->required();
    in->check(CLI::ExistingFile);
    cmd->add_option("--column", column, "Column holding returns (default: return)");
    cmd->add_option("--price-column", price_column, "Column holding prices; log returns are taken");
    cmd->add_option("--date-column", date_column, "Column holding ISO dates (YYYY-MM-DD)");
    cmd->add_option("--subperiods", subperiods, "Comma-separated subperiod lengths, e.g. 3050,3050,1350");
  }

  ReturnSeries load() const {
    if (!column.empty() && !price_column.empty()) throw UsageError("--column and --price-column are exclusive");
    CsvSchema schema;
    schema.date_column = date_column;
    if (price_column.empty()) {
      schema.return_column = column.empty() ? "return" : column;
      return load_csv(input, schema);
    }
    schema.price_column = price_column;
    return log_returns(load_csv(input, schema));
  }

  std::vector<ReturnSeries> sections(const ReturnSeries& series) const {
    if (subperiods.empty()) return {series};
    return split_subperiods(series, SubperiodSpec::parse(subperiods));
  }
};

struct OutputFlags {
  Format format = Format::Json;
  std::string output;

  void attach(CLI::App* cmd) {
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
    cmd->add_option("--format", format, "json or csv")->transform(CLI::CheckedTransformer(formats));
    cmd->add_option("--output", output, "Write the report here instead of stdout");
  }
};

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw InvalidInput("failed writing '" + path + "'");
}

std::optional<HurstMethod> parse_method(const std::string& name) {
  if (name == "rs") return HurstMethod::RescaledRange;
  if (name == "dfa") return HurstMethod::Dfa;
  if (name == "none") return std::nullopt;
  throw UsageError("--method must be rs, dfa or none");
}

void check_hurst(double h) {
  if (!(h > 0.0 && h < 1.0)) throw UsageError("--hurst must lie strictly between 0 and 1, got " + format_real(h));
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("--alpha must lie strictly between 0 and 1");
}

// Flags shared by every pattern analysis.
struct PatternFlags {
  int d = kDefaultOrder;
  int stride = 0;
  std::string weeks = "block";
  double alpha = kDefaultAlpha;
  std::string method = "rs";

  void attach(CLI::App* cmd) {
    cmd->add_option("--d", d, "Pattern length (embedding dimension)")->check(CLI::Range(kMinOrder, kMaxOrder));
    cmd->add_option("--stride", stride, "Window step (default: d)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--weeks", weeks, "block or calendar")->check(CLI::IsMember({"block", "calendar"}));
    cmd->add_option("--alpha", alpha, "Significance level");
    cmd->add_option("--method", method, "Hurst estimator: rs, dfa or none")
        ->check(CLI::IsMember({"rs", "dfa", "none"}));
  }

  AnalysisOptions options() const {
    check_alpha(alpha);
    AnalysisOptions o;
    o.order = d;
    o.stride = stride;
    o.weeks = weeks == "calendar" ? WeekMode::Calendar : WeekMode::Block;
    o.alpha = alpha;
    o.hurst = parse_method(method);
    return o;
  }
};

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string render_reports(const std::vector<AnalysisReport>& reports, Format format) {
  std::ostringstream s;
  if (format == Format::Csv) {
    write_csv_header(s);
    for (const auto& r : reports) write_csv(s, r);
    return s.str();
  }
  return dump_json(Json{{"reports", reports}});
}

// analyze ------------------------------------------------------------------

struct AnalyzeCommand {
  InputFlags input;
  PatternFlags patterns;
  OutputFlags output;
  std::string histogram;

  void attach(CLI::App* cmd) {
    input.attach(cmd, true);
    patterns.attach(cmd);
    output.attach(cmd);
    cmd->add_option("--histogram", histogram, "Also write pattern_id,pattern,count CSV here");
  }

  void run(std::ostream& out) const {
    const AnalysisOptions options = patterns.options();
    const auto sections = input.sections(input.load());
    if (!histogram.empty() && sections.size() != 1) throw UsageError("--histogram needs a single section");
    std::vector<AnalysisReport> reports;
    reports.reserve(sections.size());
    for (const auto& s : sections) reports.push_back(analyze_series(s, options));
    if (!histogram.empty()) {
      std::ostringstream h;
      write_histogram_csv(h, reports.front());
      write_text(h.str(), histogram, out);
    }
    write_text(render_reports(reports, output.format), output.output, out);
  }
};

// simulate -----------------------------------------------------------------

struct SimulateCommand {
  std::vector<double> hurst;
  std::size_t length = 10000;
  std::size_t reps = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = default_jobs();
  int d = kDefaultOrder;
  double alpha = kDefaultAlpha;
  std::uint64_t z_weeks = 0;
  std::string generator = "circulant";
  OutputFlags output;

  void attach(CLI::App* cmd) {
    cmd->add_option("--hurst", hurst, "Hurst exponents, comma-separated")->required()->delimiter(',');
    cmd->add_option("--length", length, "Values per series")->check(CLI::PositiveNumber);
    cmd->add_option("--reps", reps, "Replications per Hurst exponent")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Master seed")->required();
    cmd->add_option("--jobs", jobs, "Worker threads; does not change the output")->check(CLI::PositiveNumber);
    cmd->add_option("--d", d, "Pattern length")->check(CLI::Range(3, kMaxOrder));
    cmd->add_option("--alpha", alpha, "Significance level");
    cmd->add_option("--z-weeks", z_weeks, "Sample size N for the z-test on averaged frequencies (default: weeks per series)");
    cmd->add_option("--generator", generator, "circulant or hosking")
        ->check(CLI::IsMember({"circulant", "hosking"}));
    output.attach(cmd);
  }

  void run(std::ostream& out) const {
    check_alpha(alpha);
    for (double h : hurst) check_hurst(h);
    std::vector<SimulationReport> reports;
    for (double h : hurst) {
      EnsembleConfig cfg;
      cfg.base.hurst = h;
      cfg.base.length = length;
      cfg.replications = reps;
      cfg.master_seed = seed;
      cfg.order = d;
      cfg.alpha = alpha;
      cfg.jobs = jobs;
      cfg.z_weeks = z_weeks;
      cfg.method = generator == "hosking" ? FgnMethod::Hosking : FgnMethod::CirculantEmbedding;
      reports.push_back(run_ensemble(cfg));
    }
    std::ostringstream s;
    if (output.format == Format::Csv) {
      write_simulation_csv_header(s);
      for (const auto& r : reports) write_simulation_csv(s, r);
    } else {
      s << dump_json(Json{{"simulations", reports}});
    }
    write_text(s.str(), output.output, out);
  }
};

// shuffle ------------------------------------------------------------------

struct ShuffleCommand {
  InputFlags input;
  PatternFlags patterns;
  OutputFlags output;
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  unsigned jobs = default_jobs();

  void attach(CLI::App* cmd) {
    input.attach(cmd, true);
    patterns.attach(cmd);
    output.attach(cmd);
    cmd->add_option("--reps", reps, "Number of shuffled surrogates")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Master seed")->required();
    cmd->add_option("--jobs", jobs, "Worker threads; does not change the output")->check(CLI::PositiveNumber);
  }

  static double rate(std::size_t rejected, std::size_t total) {
    return static_cast<double>(rejected) / static_cast<double>(total);
  }

  void run(std::ostream& out) const {
    if (!input.subperiods.empty()) throw UsageError("shuffle does not take --subperiods");
    const AnalysisOptions options = patterns.options();
    if (options.weeks == WeekMode::Calendar) throw UsageError("shuffled series have no dates; use --weeks block");
    ReturnSeries series = input.load();
    series.dates.clear();

    std::vector<AnalysisReport> reports(reps);
    parallel_for_index(reps, jobs, [&](std::size_t i) {
      reports[i] = analyze_series(shuffle_series(series, replication_seed(seed, i)), options);
    });

    if (output.format == Format::Csv) {
      write_text(render_reports(reports, Format::Csv), output.output, out);
      return;
    }

    const std::size_t days = reports.front().day_rows.size();
    std::size_t h1 = 0, h4 = 0, h5 = 0;
    std::vector<std::size_t> rows(days, 0), cols(days, 0);
    Json replicates = Json::array();
    for (std::size_t i = 0; i < reps; ++i) {
      const auto& r = reports[i];
      h1 += r.pattern_uniformity.rejects(options.alpha);
      h4 += r.monday_largest.rejects(options.alpha);
      h5 += r.monday_worst_friday_best.rejects(options.alpha);
      std::vector<double> row_q, col_q;
      for (std::size_t k = 0; k < days; ++k) {
        rows[k] += r.day_rows[k].rejects(options.alpha);
        cols[k] += r.position_columns[k].rejects(options.alpha);
        row_q.push_back(r.day_rows[k].statistic);
        col_q.push_back(r.position_columns[k].statistic);
      }
      Json entry;
      entry["index"] = i;
      entry["seed"] = replication_seed(seed, i);
      entry["pattern_uniformity_q"] = r.pattern_uniformity.statistic;
      entry["pattern_uniformity_p"] = r.pattern_uniformity.p_value;
      entry["day_row_q"] = row_q;
      entry["position_column_q"] = col_q;
      entry["monday_largest_z"] = r.monday_largest.statistic;
      entry["monday_worst_friday_best_z"] = r.monday_worst_friday_best.statistic;
      replicates.push_back(std::move(entry));
    }
    std::vector<double> row_rates, col_rates;
    for (std::size_t k = 0; k < days; ++k) {
      row_rates.push_back(rate(rows[k], reps));
      col_rates.push_back(rate(cols[k], reps));
    }
    Json aggregate;
    aggregate["pattern_uniformity"] = rate(h1, reps);
    aggregate["day_rows"] = row_rates;
    aggregate["position_columns"] = col_rates;
    aggregate["monday_largest"] = rate(h4, reps);
    aggregate["monday_worst_friday_best"] = rate(h5, reps);

    Json doc;
    doc["label"] = series.label;
    doc["seed"] = seed;
    doc["replications"] = reps;
    doc["alpha"] = options.alpha;
    doc["rejection_rates"] = aggregate;
    doc["replicates"] = replicates;
    doc["first"] = reports.front();
    write_text(dump_json(doc), output.output, out);
  }
};

// patterns -----------------------------------------------------------------

struct PatternsCommand {
  int d = kDefaultOrder;
  std::string family;
  OutputFlags output;

  void attach(CLI::App* cmd) {
    cmd->add_option("--d", d, "Pattern length")->check(CLI::Range(kMinOrder, kMaxOrder));
    cmd->add_option("--family", family, "monday-largest or monday-worst-friday-best")
        ->check(CLI::IsMember({"monday-largest", "monday-worst-friday-best"}));
    output.format = Format::Csv;
    output.attach(cmd);
  }

  void run(std::ostream& out) const {
    std::vector<PatternId> ids;
    if (family.empty()) {
      const auto total = factorial(d);
      for (std::uint64_t k = 1; k <= total; ++k) ids.push_back({static_cast<std::uint32_t>(k)});
    } else {
      ids = pattern_family(family == "monday-largest" ? PatternFamily::MondayLargest
                                                      : PatternFamily::MondayWorstFridayBest,
                           d);
    }
    std::ostringstream s;
    if (output.format == Format::Json) {
      Json list = Json::array();
      for (auto id : ids) list.push_back(Json{{"id", id.value}, {"pattern", unrank_pattern(id, d).to_string()}});
      s << dump_json(Json{{"order", d}, {"family", family.empty() ? Json(nullptr) : Json(family)}, {"patterns", list}});
    } else {
      // One line per pattern and no header, so the line count is the pattern count.
      for (auto id : ids) s << id.value << ',' << unrank_pattern(id, d).to_string() << '\n';
    }
    write_text(s.str(), output.output, out);
  }
};

// hurst --------------------------------------------------------------------

struct HurstCommand {
  InputFlags input;
  OutputFlags output;
  std::string method = "rs";
  std::optional<double> hurst;
  std::size_t length = 10000;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    input.attach(cmd, false);
    output.attach(cmd);
    cmd->add_option("--method", method, "rs or dfa")->check(CLI::IsMember({"rs", "dfa"}));
    cmd->add_option("--hurst", hurst, "Without --input: estimate on generated fGn with this exponent");
    cmd->add_option("--length", length, "Length of the generated series")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Seed of the generated series");
  }

  void run(std::ostream& out) const {
    std::vector<ReturnSeries> sections;
    if (!input.input.empty()) {
      if (hurst) throw UsageError("--hurst and --input are exclusive");
      sections = input.sections(input.load());
    } else {
      if (!hurst) throw UsageError("hurst needs --input or --hurst");
      check_hurst(*hurst);
      sections.push_back(fgn_generate({.hurst = *hurst, .length = length, .seed = seed}));
    }
    const HurstOptions options{.method = *parse_method(method)};
    std::ostringstream s;
    if (output.format == Format::Csv) s << "label,method,h,r_squared,windows\n";
    Json estimates = Json::array();
    for (const auto& series : sections) {
      const HurstEstimate e = estimate_hurst(series.view(), options);
      if (output.format == Format::Csv) {
        s << series.label << ',' << to_string(e.method) << ',' << format_real(e.h) << ','
          << format_real(e.r_squared) << ',' << e.window_sizes.size() << '\n';
      } else {
        Json entry{{"label", series.label}, {"observations", series.size()}};
        const Json fields = e;
        for (const auto& [k, v] : fields.items()) entry[k] = v;
        estimates.push_back(std::move(entry));
      }
    }
    if (output.format == Format::Json) s << dump_json(Json{{"estimates", estimates}});
    write_text(s.str(), output.output, out);
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal-pattern tests for day-of-the-week effects", "ordseason"};
  app.require_subcommand(1);

  AnalyzeCommand analyze;
  SimulateCommand simulate;
  ShuffleCommand shuffle;
  PatternsCommand patterns;
  HurstCommand hurst;
  auto* analyze_cmd = app.add_subcommand("analyze", "Pattern statistics of a return series");
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo ensembles of fractional Gaussian noise");
  auto* shuffle_cmd = app.add_subcommand("shuffle", "Pattern statistics of shuffled surrogates");
  auto* patterns_cmd = app.add_subcommand("patterns", "List ordinal patterns and their ids");
  auto* hurst_cmd = app.add_subcommand("hurst", "Estimate the Hurst exponent");
  analyze.attach(analyze_cmd);
  simulate.attach(simulate_cmd);
  shuffle.attach(shuffle_cmd);
  patterns.attach(patterns_cmd);
  hurst.attach(hurst_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) analyze.run(out);
    if (simulate_cmd->parsed()) simulate.run(out);
    if (shuffle_cmd->parsed()) shuffle.run(out);
    if (patterns_cmd->parsed()) patterns.run(out);
    if (hurst_cmd->parsed()) hurst.run(out);
  } catch (const UsageError& e) {
    err << "ordseason: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "ordseason: input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ordseason: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  out.flush();
  return kExitOk;
}

}  // namespace ordseason::cli
