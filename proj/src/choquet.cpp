#include "cimetrics/choquet.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cimetrics {

namespace {

// sum_j values[j-1] * [Q(j/m) - Q((j-1)/m)] over the first `count` ranks of a
// conceptual length-m sequence. Weights are evaluated lazily so m may be much
// larger than count (zero padding contributes nothing).
double weighted_rank_sum(std::span<const std::int64_t> values, std::size_t count,
                         std::size_t m, const DistortionSpec& spec) {
  double prev = 0.0;  // Q(0)
  double acc = 0.0;
  for (std::size_t j = 1; j <= count; ++j) {
    const double cur = evaluate(spec, static_cast<double>(j) / static_cast<double>(m));
    acc += static_cast<double>(values[j - 1]) * (cur - prev);
    prev = cur;
  }
  return acc;
}

}  // namespace

double choquet_value(std::span<const double> values, const DistortionSpec& spec) {
  if (values.empty()) {
    throw std::invalid_argument("choquet_value: input must be non-empty");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0)) {
      throw std::invalid_argument("choquet_value: values must be non-negative");
    }
    if (i > 0 && values[i] > values[i - 1]) {
      throw std::invalid_argument("choquet_value: values must be non-increasing");
    }
  }

  const std::size_t m = values.size();
  double prev = 0.0;
  double acc = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    const double cur = evaluate(spec, static_cast<double>(j) / static_cast<double>(m));
    acc += values[j - 1] * (cur - prev);
    prev = cur;
  }
  return acc;
}

double ci_h(const ResearcherProfile& profile, const DistortionSpec& spec) {
  const CoreSet core = h_core(profile);
  if (core.size() == 0) return 0.0;
  const std::size_t m = core.size();
  return std::sqrt(static_cast<double>(m) *
                   weighted_rank_sum(core.values, m, m, spec));
}

double ci_g(const ResearcherProfile& profile, const DistortionSpec& spec,
            GIndexVariant variant) {
  const CoreSet core = g_core(profile, variant);
  if (core.size() == 0) return 0.0;
  const std::size_t g = core.size();
  return std::sqrt(static_cast<double>(g) *
                   weighted_rank_sum(core.values, g, g, spec));
}

double ci_n(const ResearcherProfile& profile, const DistortionSpec& spec) {
  const std::int64_t total = profile.total_citations();
  if (total == 0) return 0.0;
  const auto& x = profile.citations();

  // Trailing zero-citation papers would only multiply zero weights; skip them
  // so the loop length is the number of cited papers.
  std::size_t cited = x.size();
  while (cited > 0 && x[cited - 1] == 0) --cited;

  const double sum =
      weighted_rank_sum(x, cited, static_cast<std::size_t>(total), spec);
  return std::sqrt(static_cast<double>(total) * sum);
}

IndexReport compute_report(const ResearcherProfile& profile, const DistortionSpec& spec,
                           GIndexVariant variant) {
  IndexReport report = classic_indices(profile, variant);
  report.distortion = spec;
  report.ci_h = ci_h(profile, spec);
  report.ci_g = ci_g(profile, spec, variant);
  report.ci_n = ci_n(profile, spec);
  return report;
}

}  // namespace cimetrics
