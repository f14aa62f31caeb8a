#ifndef CIMETRICS_CHOQUET_HPP
#define CIMETRICS_CHOQUET_HPP

/**
 * @file choquet.hpp
 * @brief Discrete Choquet-integral aggregation of ranked values and the three
 *        CI-indices built on it (over the h-core, the g-core, and the core of
 *        all citations).
 *
 * For values x_1 >= ... >= x_m and a distortion Q, the aggregate is
 *     sum_j x_j * [Q(j/m) - Q((j-1)/m)]
 * which equals the integral of Q composed with the empirical survival
 * function. With Q(x) = x it is the arithmetic mean; concave Q shifts weight
 * toward the top ranks. Each CI-index is sqrt(core size * aggregate of the
 * core values).
 */

#include <span>

#include "cimetrics/core_indices.hpp"
#include "cimetrics/distortion.hpp"

namespace cimetrics {

/// Choquet integral of a non-increasing, non-negative sequence with respect
/// to the distortion-generated rank weights. Throws std::invalid_argument on
/// empty, negative, or out-of-order input (inputs are rejected, not sorted).
double choquet_value(std::span<const double> values, const DistortionSpec& spec);

/// sqrt(sharp_C_h * choquet of h-core values); 0 when the core is empty.
double ci_h(const ResearcherProfile& profile, const DistortionSpec& spec);

/// sqrt(g * choquet of the zero-padded g-core); 0 when g = 0.
double ci_g(const ResearcherProfile& profile, const DistortionSpec& spec,
            GIndexVariant variant = GIndexVariant::Unbounded);

/// sqrt(N * sum_{j<=n} x_j [Q(j/N) - Q((j-1)/N)]); 0 when N = 0. The value
/// sequence is conceptually zero-padded to length N, but only the first n
/// weights are ever evaluated, so this is O(n) regardless of N.
double ci_n(const ResearcherProfile& profile, const DistortionSpec& spec);

/// Full report: classic indices plus the three CI-indices under `spec`.
IndexReport compute_report(const ResearcherProfile& profile, const DistortionSpec& spec,
                           GIndexVariant variant = GIndexVariant::Unbounded);

}  // namespace cimetrics

#endif  // CIMETRICS_CHOQUET_HPP
