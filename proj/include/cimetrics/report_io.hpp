#ifndef CIMETRICS_REPORT_IO_HPP
#define CIMETRICS_REPORT_IO_HPP

/**
 * @file report_io.hpp
 * @brief Profile ingestion (CSV/JSON), report serialization, and curve
 *        sampling for external plotting.
 *
 * CSV profile format, one record per line, optional header detected by a
 * non-numeric second field:
 *     id,c1;c2;c3
 * JSON profile format:
 *     [{"id": "R2", "citations": [100, 0]}, ...]
 *
 * All emitters are deterministic: the same input yields byte-identical text.
 */

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cimetrics/core_indices.hpp"
#include "cimetrics/distortion.hpp"

namespace cimetrics {

enum class ProfileFormat { Csv, Json };
enum class ReportFormat { Table, Json, Csv };

/// Input data that fails parsing or validation (malformed records, negative
/// or non-integer citations, duplicate ids, unreadable files).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loads and validates profiles from a file. When `format` is not given it
/// is inferred from the extension (".json" selects JSON, anything else CSV).
/// Throws DataError on any parse or validation failure.
std::vector<ResearcherProfile> load_profiles(const std::filesystem::path& path,
                                             std::optional<ProfileFormat> format = {});

std::vector<ResearcherProfile> parse_profiles_csv(std::istream& in);
std::vector<ResearcherProfile> parse_profiles_json(std::istream& in);

/// Inverse of the loaders; citations are written in stored (non-increasing)
/// order, so load(emit(profiles)) reproduces the same profiles.
std::string emit_profiles(std::span<const ResearcherProfile> profiles, ProfileFormat format);

/// Serializes one report.
///   Table: one line of key=value pairs, reals at 6 significant digits.
///   Json:  one object, keys id, distortion, h, sharp_c_h, g, n_papers,
///          total_citations, a_index, r_index, r_m, r_g, r_n, euclidean,
///          ci_h, ci_g, ci_n in that order, reals at full precision.
///   Csv:   header line plus one data row, reals at full precision.
std::string emit_report(const IndexReport& report, ReportFormat format);

/// Row-level pieces for multi-report output.
std::string report_csv_header();
std::string report_csv_row(const IndexReport& report);
std::string report_table_row(const IndexReport& report);

/// Collection form: Table emits one row per report, Csv one header plus one
/// row per report, Json a single array of report objects.
std::string emit_reports(std::span<const IndexReport> reports, ReportFormat format);

enum class CurveKind { DistortionCurve, WeightBars };

/// Sampled points of either the distortion curve (x in [0,1], strictly
/// increasing) or the rank-weight bars (x = rank 1..m, y = weight).
struct CurveSample {
  CurveKind kind = CurveKind::DistortionCurve;
  std::vector<std::pair<double, double>> points;
};

struct CurvePair {
  CurveSample curve;
  CurveSample bars;
};

/// Samples the distortion at grid+1 uniform points and the m rank weights.
/// Requires grid >= 2 and ranks >= 1.
CurvePair emit_curves(const DistortionSpec& spec, std::size_t ranks, std::size_t grid);

/// Renders both samples as one CSV stream with a `kind,x,y` header; rows are
/// `curve,<x>,<Q(x)>` then `bars,<rank>,<weight>`.
std::string curves_to_csv(const CurvePair& curves);

}  // namespace cimetrics

#endif  // CIMETRICS_REPORT_IO_HPP
