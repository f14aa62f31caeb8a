#include "cimetrics/core_indices.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cimetrics {

ResearcherProfile::ResearcherProfile(std::string id, std::vector<std::int64_t> citations)
    : id_(std::move(id)), citations_(std::move(citations)) {
  for (const std::int64_t c : citations_) {
    if (c < 0) {
      throw std::invalid_argument("profile '" + id_ + "': citation counts must be non-negative");
    }
  }
  std::sort(citations_.begin(), citations_.end(), std::greater<>());
  total_ = std::accumulate(citations_.begin(), citations_.end(), std::int64_t{0});
}

std::int64_t h_index(const ResearcherProfile& profile) {
  const auto& x = profile.citations();
  std::int64_t h = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= static_cast<std::int64_t>(i) + 1) {
      h = static_cast<std::int64_t>(i) + 1;
    } else {
      break;
    }
  }
  return h;
}

CoreSet h_core(const ResearcherProfile& profile) {
  CoreSet core{CoreKind::HCore, {}};
  const std::int64_t h = h_index(profile);
  if (h == 0) return core;

  const auto& x = profile.citations();
  const std::int64_t threshold = x[static_cast<std::size_t>(h) - 1];  // x_h
  for (const std::int64_t c : x) {
    if (c < threshold) break;
    core.values.push_back(c);
  }
  return core;
}

std::int64_t g_index(const ResearcherProfile& profile, GIndexVariant variant) {
  const auto& x = profile.citations();
  const std::int64_t n = static_cast<std::int64_t>(x.size());

  std::int64_t g = 0;
  std::int64_t cum = 0;
  for (std::int64_t k = 1;; ++k) {
    if (variant == GIndexVariant::Capped && k > n) break;
    if (k <= n) cum += x[static_cast<std::size_t>(k) - 1];
    if (cum >= k * k) {
      g = k;
    } else {
      // cum is concave in k and k^2 convex, so the condition never recovers.
      break;
    }
  }
  return g;
}

CoreSet g_core(const ResearcherProfile& profile, GIndexVariant variant) {
  CoreSet core{CoreKind::GCore, {}};
  const std::int64_t g = g_index(profile, variant);
  if (g == 0) return core;

  const auto& x = profile.citations();
  const std::size_t take = std::min<std::size_t>(x.size(), static_cast<std::size_t>(g));
  core.values.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(take));
  core.values.resize(static_cast<std::size_t>(g), 0);
  return core;
}

IndexReport classic_indices(const ResearcherProfile& profile, GIndexVariant variant) {
  IndexReport report;
  report.id = profile.id();
  report.n_papers = static_cast<std::int64_t>(profile.n_papers());
  report.total_citations = profile.total_citations();
  report.h = h_index(profile);

  const auto& x = profile.citations();
  std::int64_t top_h_sum = 0;
  for (std::int64_t i = 0; i < report.h; ++i) {
    top_h_sum += x[static_cast<std::size_t>(i)];
  }

  const CoreSet hc = h_core(profile);
  report.sharp_c_h = static_cast<std::int64_t>(hc.size());
  const std::int64_t h_core_sum =
      std::accumulate(hc.values.begin(), hc.values.end(), std::int64_t{0});

  const CoreSet gc = g_core(profile, variant);
  report.g = static_cast<std::int64_t>(gc.size());
  const std::int64_t g_core_sum =
      std::accumulate(gc.values.begin(), gc.values.end(), std::int64_t{0});

  double sum_sq = 0.0;
  for (const std::int64_t c : x) {
    sum_sq += static_cast<double>(c) * static_cast<double>(c);
  }

  report.a_index = report.h > 0
                       ? static_cast<double>(top_h_sum) / static_cast<double>(report.h)
                       : 0.0;
  report.r_index = std::sqrt(static_cast<double>(top_h_sum));
  report.r_m = std::sqrt(static_cast<double>(h_core_sum));
  report.r_g = std::sqrt(static_cast<double>(g_core_sum));
  report.r_n = std::sqrt(static_cast<double>(report.total_citations));
  report.euclidean = std::sqrt(sum_sq);
  return report;
}

}  // namespace cimetrics
