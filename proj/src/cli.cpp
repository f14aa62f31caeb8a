#include "cimetrics/cli.hpp"

#include <cstdio>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "cimetrics/choquet.hpp"
#include "cimetrics/ranking.hpp"
#include "cimetrics/report_io.hpp"

namespace cimetrics::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

struct IndexOptions {
  std::string input;
  std::string format;  // "", "csv", "json"
  std::string distortion;
  std::string out = "table";
  bool g_capped = false;
};

struct RankOptions {
  std::string input;
  std::string distortion;
  double tolerance = 1e-9;
  bool best_first = false;
};

struct CurvesOptions {
  std::string distortion;
  std::size_t ranks = 10;
  std::size_t grid = 100;
};

std::optional<ProfileFormat> profile_format_of(const std::string& name) {
  if (name == "csv") return ProfileFormat::Csv;
  if (name == "json") return ProfileFormat::Json;
  return std::nullopt;  // infer from extension
}

ReportFormat report_format_of(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return ReportFormat::Table;
}

int run_index(const IndexOptions& opt, std::ostream& out) {
  const DistortionSpec spec = parse_distortion(opt.distortion);
  const auto profiles = load_profiles(opt.input, profile_format_of(opt.format));
  const GIndexVariant variant =
      opt.g_capped ? GIndexVariant::Capped : GIndexVariant::Unbounded;

  std::vector<IndexReport> reports;
  reports.reserve(profiles.size());
  for (const auto& p : profiles) {
    reports.push_back(compute_report(p, spec, variant));
  }
  out << emit_reports(reports, report_format_of(opt.out));
  return kExitOk;
}

int run_rank(const RankOptions& opt, std::ostream& out) {
  const DistortionSpec spec = parse_distortion(opt.distortion);
  const auto profiles = load_profiles(opt.input);
  if (profiles.empty()) {
    throw DataError("input file '" + opt.input + "' contains no profiles");
  }
  const RankResult result = rank(profiles, spec, opt.tolerance);

  out << format_chain(result, opt.best_first) << "\n";
  for (std::size_t i = 0; i < result.boundaries.size(); ++i) {
    const ComparisonOutcome& b = result.boundaries[i];
    const char* level = b.deciding_rule <= 2 ? "ci_h" : b.deciding_rule <= 4 ? "ci_g" : "ci_n";
    char margin[64];
    std::snprintf(margin, sizeof margin, "%.6g", b.margin);
    out << "rule " << b.deciding_rule << ": " << result.groups[i].front() << " ≺ "
        << result.groups[i + 1].front() << " (" << level << " margin " << margin << ")\n";
  }
  return kExitOk;
}

int run_curves(const CurvesOptions& opt, std::ostream& out) {
  const DistortionSpec spec = parse_distortion(opt.distortion);
  out << curves_to_csv(emit_curves(spec, opt.ranks, opt.grid));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Choquet-integral citation indices and researcher ranking"};
  app.name("ci-metrics");
  app.require_subcommand(1);

  IndexOptions index_opt;
  CLI::App* index_cmd =
      app.add_subcommand("index", "Compute all indices for each profile in a file");
  index_cmd->add_option("--input", index_opt.input, "Profile file (CSV or JSON)")
      ->required();
  index_cmd->add_option("--format", index_opt.format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  index_cmd->add_option("--distortion", index_opt.distortion,
                        "Distortion spec, e.g. power:a=0.5")
      ->required();
  index_cmd->add_flag("--g-capped", index_opt.g_capped,
                      "Cap the g-index at the number of papers");
  index_cmd->add_option("--out", index_opt.out, "Output format (default: table)")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  RankOptions rank_opt;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "Rank profiles lexicographically by (ci_h, ci_g, ci_n)");
  rank_cmd->add_option("--input", rank_opt.input, "Profile file (CSV or JSON)")->required();
  rank_cmd->add_option("--distortion", rank_opt.distortion,
                       "Distortion spec, e.g. power:a=0.5")
      ->required();
  rank_cmd->add_option("--tol", rank_opt.tolerance, "Relative tie tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  rank_cmd->add_flag("--best-first", rank_opt.best_first,
                     "Display the chain best-first instead of worst-first");

  CurvesOptions curves_opt;
  CLI::App* curves_cmd =
      app.add_subcommand("curves", "Emit distortion curve and weight bars as CSV");
  curves_cmd->add_option("--distortion", curves_opt.distortion,
                         "Distortion spec, e.g. power:a=0.5")
      ->required();
  curves_cmd->add_option("--ranks", curves_opt.ranks, "Number of weight bars (default 10)")
      ->check(CLI::PositiveNumber);
  curves_cmd->add_option("--grid", curves_opt.grid, "Curve grid intervals (default 100)")
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (index_cmd->parsed()) return run_index(index_opt, out);
    if (rank_cmd->parsed()) return run_rank(rank_opt, out);
    return run_curves(curves_opt, out);
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace cimetrics::cli
