#include "cimetrics/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cimetrics {

namespace {

bool nearly_equal(double a, double b, double rel_tol) {
  return std::fabs(a - b) <= rel_tol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

ComparisonOutcome compare(const IndexReport& lhs, const IndexReport& rhs,
                          double relative_tolerance) {
  if (!(lhs.distortion == rhs.distortion)) {
    throw std::invalid_argument("compare: reports were computed under different distortions");
  }

  if (!nearly_equal(lhs.ci_h, rhs.ci_h, relative_tolerance)) {
    const double margin = std::fabs(lhs.ci_h - rhs.ci_h);
    if (lhs.ci_h > rhs.ci_h) return {Relation::Better, 1, margin};
    return {Relation::Worse, 2, margin};
  }
  if (!nearly_equal(lhs.ci_g, rhs.ci_g, relative_tolerance)) {
    const double margin = std::fabs(lhs.ci_g - rhs.ci_g);
    if (lhs.ci_g > rhs.ci_g) return {Relation::Better, 3, margin};
    return {Relation::Worse, 4, margin};
  }
  if (!nearly_equal(lhs.ci_n, rhs.ci_n, relative_tolerance)) {
    const double margin = std::fabs(lhs.ci_n - rhs.ci_n);
    if (lhs.ci_n > rhs.ci_n) return {Relation::Better, 5, margin};
    return {Relation::Worse, 6, margin};
  }
  return {Relation::Equivalent, 7, 0.0};
}

RankResult rank(std::span<const ResearcherProfile> profiles, const DistortionSpec& spec,
                double relative_tolerance) {
  if (profiles.empty()) {
    throw std::invalid_argument("rank: profile collection must be non-empty");
  }
  std::unordered_set<std::string> seen;
  for (const auto& p : profiles) {
    if (!seen.insert(p.id()).second) {
      throw std::invalid_argument("rank: duplicate profile id '" + p.id() + "'");
    }
  }

  RankResult result;
  result.distortion = spec;
  result.tolerance = relative_tolerance;
  result.reports.reserve(profiles.size());
  for (const auto& p : profiles) {
    result.reports.push_back(compute_report(p, spec));
  }

  // Worst first; stable keeps input order inside equivalence classes.
  std::vector<std::size_t> order(profiles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return compare(result.reports[i], result.reports[j], relative_tolerance).relation ==
           Relation::Worse;
  });

  for (std::size_t k = 0; k < order.size(); ++k) {
    const IndexReport& cur = result.reports[order[k]];
    if (k > 0) {
      const IndexReport& prev = result.reports[order[k - 1]];
      const ComparisonOutcome boundary = compare(prev, cur, relative_tolerance);
      if (boundary.relation == Relation::Equivalent) {
        result.groups.back().push_back(cur.id);
        continue;
      }
      result.boundaries.push_back(boundary);
    }
    result.groups.push_back({cur.id});
  }
  return result;
}

std::string format_chain(const RankResult& result, bool best_first) {
  const char* separator = best_first ? " ≻ " : " ≺ ";

  std::vector<std::string> rendered;
  rendered.reserve(result.groups.size());
  for (const auto& group : result.groups) {
    if (group.size() == 1) {
      rendered.push_back(group.front());
      continue;
    }
    std::string tie = "{";
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i > 0) tie += " ~ ";
      tie += group[i];
    }
    tie += "}";
    rendered.push_back(std::move(tie));
  }
  if (best_first) std::reverse(rendered.begin(), rendered.end());

  std::string out;
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    if (i > 0) out += separator;
    out += rendered[i];
  }
  return out;
}

}  // namespace cimetrics
