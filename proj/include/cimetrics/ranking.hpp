#ifndef CIMETRICS_RANKING_HPP
#define CIMETRICS_RANKING_HPP

/**
 * @file ranking.hpp
 * @brief Lexicographic comparison of researchers by (CI_h, CI_g, CI_N) and
 *        total preordering of profile collections.
 *
 * The comparison applies rules 1..7 in order: a CI_h gap decides (rules 1/2),
 * otherwise a CI_g gap (rules 3/4), otherwise a CI_N gap (rules 5/6);
 * otherwise the profiles are equivalent (rule 7). "Gap" is relative to a
 * tolerance, since the indices are real-valued; the default 1e-9 sits far
 * below any difference integer citation data can produce at realistic scale.
 */

#include <span>
#include <string>
#include <vector>

#include "cimetrics/choquet.hpp"
#include "cimetrics/core_indices.hpp"

namespace cimetrics {

enum class Relation { Better, Worse, Equivalent };

struct ComparisonOutcome {
  Relation relation = Relation::Equivalent;
  int deciding_rule = 7;  // 1..7
  double margin = 0.0;    // |difference| at the deciding level, 0 for rule 7
};

/// Compares two reports from `lhs`'s perspective. Both must have been
/// computed under the same distortion spec; throws std::invalid_argument
/// otherwise.
ComparisonOutcome compare(const IndexReport& lhs, const IndexReport& rhs,
                          double relative_tolerance = 1e-9);

/// Total preorder over a profile collection, presented worst-first to match
/// the chain notation (A precedes B means A is ranked worse).
struct RankResult {
  /// Equivalence classes of profile ids, worst first; within a class the
  /// original input order is kept.
  std::vector<std::vector<std::string>> groups;
  /// Outcome of compare(groups[i], groups[i+1]) for each adjacent boundary;
  /// always Worse, with the deciding rule in {2, 4, 6}.
  std::vector<ComparisonOutcome> boundaries;
  /// One report per input profile, in input order.
  std::vector<IndexReport> reports;
  DistortionSpec distortion;
  double tolerance = 1e-9;
};

/// Computes every report under `spec` and sorts. Throws
/// std::invalid_argument on an empty collection or duplicate ids.
RankResult rank(std::span<const ResearcherProfile> profiles, const DistortionSpec& spec,
                double relative_tolerance = 1e-9);

/// Renders the chain, e.g. "R8 < R10 < {A ~ B} < R6" with U+227A as the
/// separator; best_first reverses the display order (U+227B).
std::string format_chain(const RankResult& result, bool best_first = false);

}  // namespace cimetrics

#endif  // CIMETRICS_RANKING_HPP
