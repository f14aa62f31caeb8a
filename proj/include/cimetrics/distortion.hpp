#ifndef CIMETRICS_DISTORTION_HPP
#define CIMETRICS_DISTORTION_HPP

/**
 * @file distortion.hpp
 * @brief Distortion functions Q:[0,1]->[0,1] (non-decreasing, Q(0)=0, Q(1)=1),
 *        the rank weights they generate, and numeric shape classification.
 *
 * Supported families:
 *   identity               Q(x) = x
 *   power (a > 0)          Q(x) = x^a
 *   dual power (b > 0)     Q(x) = 1 - (1-x)^b
 *   incomplete beta        Q(x) = I_x(a, b), a > 0, b > 0
 *   wang (0 < p < 1)       Q(x) = Phi(Phi^-1(x) + Phi^-1(p)), Q(0)=0, Q(1)=1
 *   lookback (0 < p <= 1)  Q(x) = x^p (1 - p ln x), Q(0)=0
 *
 * Everything here is a pure function of its inputs; specs are immutable
 * after construction and safe to share across threads.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cimetrics {

enum class DistortionFamily {
  Identity,
  Power,
  DualPower,
  IncompleteBeta,
  Wang,
  Lookback,
};

/// A distortion family tag plus its parameters. Construction validates the
/// family-specific parameter domains and throws std::domain_error on
/// violation. Unused parameters are not exposed.
class DistortionSpec {
 public:
  /// Default spec is the identity distortion.
  DistortionSpec() = default;

  static DistortionSpec identity();
  static DistortionSpec power(double a);
  static DistortionSpec dual_power(double b);
  static DistortionSpec incomplete_beta(double a, double b);
  static DistortionSpec wang(double p);
  static DistortionSpec lookback(double p);

  DistortionFamily family() const { return family_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double p() const { return p_; }

  /// Canonical compact form, e.g. "power:a=0.5" or "beta:a=0.5,b=2".
  std::string to_string() const;

  bool operator==(const DistortionSpec&) const = default;

 private:
  DistortionSpec(DistortionFamily family, double a, double b, double p)
      : family_(family), a_(a), b_(b), p_(p) {}

  DistortionFamily family_ = DistortionFamily::Identity;
  double a_ = 0.0;
  double b_ = 0.0;
  double p_ = 0.0;
};

/// Parses the compact CLI form: `identity`, `power:a=0.5`, `dualpower:b=2`,
/// `beta:a=0.5,b=2`, `wang:p=0.75`, `lookback:p=0.5`. Case-insensitive.
/// Throws std::invalid_argument on grammar errors (unknown family, missing or
/// unexpected parameters) and std::domain_error on out-of-domain parameters.
DistortionSpec parse_distortion(std::string_view text);

/// Q(x) for x in [0,1]. Exact 0 and 1 at the endpoints for every family.
/// Throws std::domain_error when x is outside [0,1].
double evaluate(const DistortionSpec& spec, double x);

/// Rank weights w_j = Q(j/m) - Q((j-1)/m), j = 1..m (index 0 = rank 1 = most
/// cited). Non-negative, sum to 1 within 1e-10.
struct WeightVector {
  std::vector<double> w;

  std::size_t size() const { return w.size(); }
  double operator[](std::size_t j) const { return w[j]; }
};

/// Generates the m rank weights of `spec`. Tiny negative increments from
/// rounding are clamped to 0; the vector is renormalized if the sum drifts
/// beyond 1e-10. Throws std::invalid_argument for m = 0.
WeightVector make_weights(const DistortionSpec& spec, std::size_t m);

enum class CurveShape { Convex, Concave, Neither, Linear };

std::string_view to_string(CurveShape shape);

/// Classifies Q by the sign pattern of second differences on a uniform grid
/// of `grid_size` points (>= 3), with tolerance 1e-9 for linear/boundary
/// ties. Concave distortions overweight top ranks, convex ones the tail.
CurveShape classify_shape(const DistortionSpec& spec, std::size_t grid_size);

}  // namespace cimetrics

#endif  // CIMETRICS_DISTORTION_HPP
