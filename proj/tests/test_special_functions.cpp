#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "cimetrics/special_functions.hpp"
#include "oracles.hpp"

using cimetrics::log_beta;
using cimetrics::log_gamma;
using cimetrics::normal_cdf;
using cimetrics::normal_quantile;
using cimetrics::regularized_incomplete_beta;

TEST_CASE("normal_cdf matches the series oracle across the usable range") {
  for (double z = -6.0; z <= 6.0 + 1e-9; z += 0.125) {
    CHECK(std::fabs(normal_cdf(z) - oracles::normal_cdf_series(z)) <= 1e-12);
  }
}

TEST_CASE("normal_cdf symmetry and center") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  for (double z : {0.3, 1.0, 2.5, 4.0}) {
    CHECK(std::fabs(normal_cdf(z) + normal_cdf(-z) - 1.0) <= 1e-14);
  }
}

TEST_CASE("normal_cdf at the 97.5% point") {
  // 1.959963985 located by bisecting the series oracle at 0.975.
  const double z_star = oracles::normal_quantile_bisect(0.975);
  CHECK(z_star == doctest::Approx(1.959963985).epsilon(1e-8));
  CHECK(std::fabs(normal_cdf(1.959963985) - 0.975) <= 1e-10);
}

TEST_CASE("normal_quantile hits the median exactly") {
  CHECK(normal_quantile(0.5) == 0.0);
}

TEST_CASE("normal_quantile round-trips through normal_cdf") {
  for (double u : {0.01, 0.3, 0.999}) {
    CHECK(std::fabs(normal_cdf(normal_quantile(u)) - u) <= 1e-9);
  }
  for (double z : {-3.5, -1.0, 0.25, 2.0}) {
    CHECK(normal_quantile(normal_cdf(z)) == doctest::Approx(z).epsilon(1e-11));
  }
}

TEST_CASE("normal_quantile at 0.975") {
  CHECK(std::fabs(normal_quantile(0.975) - 1.959964) <= 1e-5);
  CHECK(normal_quantile(0.975) == doctest::Approx(1.9599639845400545).epsilon(1e-12));
}

TEST_CASE("normal_quantile rejects arguments outside (0,1)") {
  CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(-0.1), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.5), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(std::nan("")), std::domain_error);
}

TEST_CASE("regularized incomplete beta matches integer closed forms") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (double x = 0.0; x <= 1.0 + 1e-12; x += 0.05) {
        const double xx = std::min(x, 1.0);
        const double expected = oracles::regularized_beta_integer(xx, a, b);
        CHECK(std::fabs(regularized_incomplete_beta(xx, a, b) - expected) <= 1e-10);
      }
    }
  }
}

TEST_CASE("regularized incomplete beta uniform case is the identity") {
  for (double x : {0.0, 0.1, 0.7, 1.0}) {
    CHECK(regularized_incomplete_beta(x, 1.0, 1.0) == doctest::Approx(x).epsilon(1e-14));
  }
}

TEST_CASE("beta(2,3) at one quarter equals its polynomial antiderivative") {
  // 12*(x^2/2 - 2x^3/3 + x^4/4) at x = 0.25 is exactly 0.26171875.
  const double x = 0.25;
  const double closed_form = 12.0 * (x * x / 2 - 2 * x * x * x / 3 + x * x * x * x / 4);
  CHECK(closed_form == 0.26171875);
  CHECK(std::fabs(regularized_incomplete_beta(0.25, 2.0, 3.0) - 0.26171875) <= 1e-10);
}

TEST_CASE("regularized incomplete beta is symmetric under (x,a,b) -> (1-x,b,a)") {
  for (double x : {0.05, 0.3, 0.62, 0.9}) {
    for (auto [a, b] : {std::pair{0.5, 2.0}, {2.0, 3.0}, {7.5, 1.25}}) {
      const double lhs = regularized_incomplete_beta(x, a, b);
      const double rhs = 1.0 - regularized_incomplete_beta(1.0 - x, b, a);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("regularized incomplete beta rejects bad domains") {
  CHECK_THROWS_AS(regularized_incomplete_beta(-0.1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 0.0, 1), std::domain_error);
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 1, -2), std::domain_error);
}

TEST_CASE("log_gamma spot values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
}

TEST_CASE("log_beta agrees with the factorial form for integers") {
  // B(a,b) = (a-1)!(b-1)!/(a+b-1)!
  CHECK(log_beta(2, 3) == doctest::Approx(std::log(1.0 / 12.0)).epsilon(1e-13));
  CHECK(log_beta(4, 4) == doctest::Approx(std::log(6.0 * 6.0 / 5040.0)).epsilon(1e-13));
}
