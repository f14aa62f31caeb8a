#ifndef CIMETRICS_CORE_INDICES_HPP
#define CIMETRICS_CORE_INDICES_HPP

/**
 * @file core_indices.hpp
 * @brief Classic citation indices and the core sets they induce: h and the
 *        h-core, g (with the fictitious-zero-papers variant) and the g-core,
 *        A, R and its square-root-of-sum relatives, the Euclidean index.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "cimetrics/distortion.hpp"

namespace cimetrics {

/// A researcher identifier plus citation counts, one per paper, kept in
/// non-increasing order. Zero-citation papers are allowed; they count toward
/// n but never enter any core.
class ResearcherProfile {
 public:
  /// Sorts `citations` non-increasing. Throws std::invalid_argument if any
  /// count is negative.
  ResearcherProfile(std::string id, std::vector<std::int64_t> citations);

  const std::string& id() const { return id_; }
  const std::vector<std::int64_t>& citations() const { return citations_; }
  std::size_t n_papers() const { return citations_.size(); }
  std::int64_t total_citations() const { return total_; }

  bool operator==(const ResearcherProfile&) const = default;

 private:
  std::string id_;
  std::vector<std::int64_t> citations_;
  std::int64_t total_ = 0;
};

enum class CoreKind { HCore, GCore };

/// Citation counts of one core, non-increasing. The g-core is padded with
/// zeros when g exceeds the paper count, so values.size() is the core size
/// (sharp C_h, or g) in both cases.
struct CoreSet {
  CoreKind kind = CoreKind::HCore;
  std::vector<std::int64_t> values;

  std::size_t size() const { return values.size(); }
};

/// Unbounded is the Egghe-Rousseau variant: g may exceed the paper count by
/// padding with fictitious zero-citation papers. Capped restores g <= n.
enum class GIndexVariant { Unbounded, Capped };

/// Largest h >= 0 such that at least h papers have >= h citations.
std::int64_t h_index(const ResearcherProfile& profile);

/// The h-core: the top h papers together with every paper tied with the h-th
/// most-cited one (all members have >= x_h citations, so the counts at ranks
/// h..size are all equal). Empty when h = 0.
CoreSet h_core(const ResearcherProfile& profile);

/// Largest g >= 0 whose top g papers jointly have at least g^2 citations,
/// zero-padding past the paper count unless capped.
std::int64_t g_index(const ResearcherProfile& profile,
                     GIndexVariant variant = GIndexVariant::Unbounded);

/// Top min(g, n) citation counts padded with zeros to length g.
CoreSet g_core(const ResearcherProfile& profile,
               GIndexVariant variant = GIndexVariant::Unbounded);

/// Every scalar index computed for one profile under one distortion.
struct IndexReport {
  std::string id;
  DistortionSpec distortion;
  std::int64_t h = 0;
  std::int64_t sharp_c_h = 0;
  std::int64_t g = 0;
  std::int64_t n_papers = 0;
  std::int64_t total_citations = 0;
  double a_index = 0.0;
  double r_index = 0.0;
  double r_m = 0.0;
  double r_g = 0.0;
  double r_n = 0.0;
  double euclidean = 0.0;
  double ci_h = 0.0;
  double ci_g = 0.0;
  double ci_n = 0.0;
};

/// Fills the classic part of the report (everything except ci_h/ci_g/ci_n
/// and the distortion tag):
///   A   = (sum of top h) / h, 0 when h = 0
///   R   = sqrt(sum of top h)         R_m = sqrt(sum over h-core)
///   R_g = sqrt(sum over g-core)      R_N = sqrt(N)
///   euclidean = sqrt(sum of squares)
IndexReport classic_indices(const ResearcherProfile& profile,
                            GIndexVariant variant = GIndexVariant::Unbounded);

}  // namespace cimetrics

#endif  // CIMETRICS_CORE_INDICES_HPP
