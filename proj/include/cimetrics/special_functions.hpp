#ifndef CIMETRICS_SPECIAL_FUNCTIONS_HPP
#define CIMETRICS_SPECIAL_FUNCTIONS_HPP

/**
 * @file special_functions.hpp
 * @brief Numeric primitives behind the distortion families: standard normal
 *        CDF/quantile and the regularized incomplete beta function.
 *
 * All functions are pure and thread-safe (no errno/global-state reliance
 * beyond the C library's thread-local errno).
 */

namespace cimetrics {

/// Standard normal distribution function Phi(z). Absolute error <= 1e-12.
double normal_cdf(double z);

/// Inverse of normal_cdf on (0,1). Rational approximation plus one Halley
/// correction step against normal_cdf; absolute error well under 1e-9.
/// Throws std::domain_error for u <= 0 or u >= 1 (including non-finite u).
double normal_quantile(double u);

/// log(Gamma(z)) for z > 0 (Lanczos, g = 7, 9 coefficients).
double log_gamma(double z);

/// log(Beta(a, b)) for a, b > 0.
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b) for x in [0,1], a > 0, b > 0,
/// by continued fraction with the symmetry switch at x > (a+1)/(a+b+2).
/// Absolute error <= 1e-10. Throws std::domain_error on domain violations.
double regularized_incomplete_beta(double x, double a, double b);

}  // namespace cimetrics

#endif  // CIMETRICS_SPECIAL_FUNCTIONS_HPP
