#include "cimetrics/distortion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "cimetrics/special_functions.hpp"

namespace cimetrics {

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw std::domain_error(std::string("distortion parameter ") + name +
                            " must be a positive finite number");
  }
}

// Shortest representation that parses back to the same double.
std::string format_param(double v) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string lower_copy(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double parse_number(std::string_view s, std::string_view what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("distortion spec: cannot parse value for '" +
                                std::string(what) + "'");
  }
  return v;
}

// Parses "k=v[,k=v...]" into (key, value) pairs.
std::vector<std::pair<std::string, double>> parse_params(std::string_view text) {
  std::vector<std::pair<std::string, double>> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw std::invalid_argument("distortion spec: expected name=value, got '" +
                                  std::string(item) + "'");
    }
    std::string key(item.substr(0, eq));
    out.emplace_back(key, parse_number(item.substr(eq + 1), key));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

double find_param(const std::vector<std::pair<std::string, double>>& params,
                  std::string_view family, std::initializer_list<const char*> wanted,
                  const char* name) {
  for (const auto& [k, v] : params) {
    bool known = false;
    for (const char* w : wanted) known = known || (k == w);
    if (!known) {
      throw std::invalid_argument("distortion spec: unexpected parameter '" + k +
                                  "' for family '" + std::string(family) + "'");
    }
  }
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw std::invalid_argument("distortion spec: family '" + std::string(family) +
                              "' requires parameter '" + name + "'");
}

}  // namespace

DistortionSpec DistortionSpec::identity() {
  return DistortionSpec(DistortionFamily::Identity, 0.0, 0.0, 0.0);
}

DistortionSpec DistortionSpec::power(double a) {
  require_positive(a, "a");
  return DistortionSpec(DistortionFamily::Power, a, 0.0, 0.0);
}

DistortionSpec DistortionSpec::dual_power(double b) {
  require_positive(b, "b");
  return DistortionSpec(DistortionFamily::DualPower, 0.0, b, 0.0);
}

DistortionSpec DistortionSpec::incomplete_beta(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return DistortionSpec(DistortionFamily::IncompleteBeta, a, b, 0.0);
}

DistortionSpec DistortionSpec::wang(double p) {
  if (!std::isfinite(p) || !(p > 0.0 && p < 1.0)) {
    throw std::domain_error("distortion parameter p must lie in (0,1) for wang");
  }
  return DistortionSpec(DistortionFamily::Wang, 0.0, 0.0, p);
}

DistortionSpec DistortionSpec::lookback(double p) {
  if (!std::isfinite(p) || !(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("distortion parameter p must lie in (0,1] for lookback");
  }
  return DistortionSpec(DistortionFamily::Lookback, 0.0, 0.0, p);
}

std::string DistortionSpec::to_string() const {
  switch (family_) {
    case DistortionFamily::Identity:
      return "identity";
    case DistortionFamily::Power:
      return "power:a=" + format_param(a_);
    case DistortionFamily::DualPower:
      return "dualpower:b=" + format_param(b_);
    case DistortionFamily::IncompleteBeta:
      return "beta:a=" + format_param(a_) + ",b=" + format_param(b_);
    case DistortionFamily::Wang:
      return "wang:p=" + format_param(p_);
    case DistortionFamily::Lookback:
      return "lookback:p=" + format_param(p_);
  }
  return "identity";
}

DistortionSpec parse_distortion(std::string_view text) {
  const std::string lowered = lower_copy(text);
  std::string_view s(lowered);

  const std::size_t colon = s.find(':');
  const std::string_view family = s.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  const auto params = parse_params(rest);

  if (family == "identity") {
    if (!params.empty()) {
      throw std::invalid_argument("distortion spec: identity takes no parameters");
    }
    return DistortionSpec::identity();
  }
  if (family == "power") {
    return DistortionSpec::power(find_param(params, family, {"a"}, "a"));
  }
  if (family == "dualpower") {
    return DistortionSpec::dual_power(find_param(params, family, {"b"}, "b"));
  }
  if (family == "beta") {
    const double a = find_param(params, family, {"a", "b"}, "a");
    const double b = find_param(params, family, {"a", "b"}, "b");
    return DistortionSpec::incomplete_beta(a, b);
  }
  if (family == "wang") {
    return DistortionSpec::wang(find_param(params, family, {"p"}, "p"));
  }
  if (family == "lookback") {
    return DistortionSpec::lookback(find_param(params, family, {"p"}, "p"));
  }
  throw std::invalid_argument("distortion spec: unknown family '" + std::string(family) + "'");
}

double evaluate(const DistortionSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("distortion argument must lie in [0,1]");
  }
  switch (spec.family()) {
    case DistortionFamily::Identity:
      return x;
    case DistortionFamily::Power:
      return std::pow(x, spec.a());
    case DistortionFamily::DualPower:
      return 1.0 - std::pow(1.0 - x, spec.b());
    case DistortionFamily::IncompleteBeta:
      return regularized_incomplete_beta(x, spec.a(), spec.b());
    case DistortionFamily::Wang:
      // Phi^-1 is infinite at the endpoints; 0 and 1 hold by definition.
      if (x == 0.0) return 0.0;
      if (x == 1.0) return 1.0;
      return normal_cdf(normal_quantile(x) + normal_quantile(spec.p()));
    case DistortionFamily::Lookback:
      // x^p ln x -> 0 as x -> 0+.
      if (x == 0.0) return 0.0;
      return std::pow(x, spec.p()) * (1.0 - spec.p() * std::log(x));
  }
  throw std::logic_error("evaluate: unhandled distortion family");
}

WeightVector make_weights(const DistortionSpec& spec, std::size_t m) {
  if (m == 0) {
    throw std::invalid_argument("make_weights: m must be at least 1");
  }
  WeightVector weights;
  weights.w.resize(m);

  double prev = 0.0;  // Q(0)
  double sum = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    const double cur = evaluate(spec, static_cast<double>(j) / static_cast<double>(m));
    double wj = cur - prev;
    if (wj < 0.0) wj = 0.0;  // rounding-only; Q is non-decreasing
    weights.w[j - 1] = wj;
    sum += wj;
    prev = cur;
  }
  if (std::fabs(sum - 1.0) > 1e-10 && sum > 0.0) {
    for (double& wj : weights.w) wj /= sum;
  }
  return weights;
}

std::string_view to_string(CurveShape shape) {
  switch (shape) {
    case CurveShape::Convex:
      return "convex";
    case CurveShape::Concave:
      return "concave";
    case CurveShape::Neither:
      return "neither";
    case CurveShape::Linear:
      return "linear";
  }
  return "neither";
}

CurveShape classify_shape(const DistortionSpec& spec, std::size_t grid_size) {
  if (grid_size < 3) {
    throw std::invalid_argument("classify_shape: grid size must be at least 3");
  }
  constexpr double kTol = 1e-9;

  const std::size_t n = grid_size;
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = evaluate(spec, static_cast<double>(i) / static_cast<double>(n - 1));
  }

  bool has_positive = false;
  bool has_negative = false;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d2 = q[i + 1] - 2.0 * q[i] + q[i - 1];
    if (d2 > kTol) has_positive = true;
    if (d2 < -kTol) has_negative = true;
  }

  if (has_positive && has_negative) return CurveShape::Neither;
  if (has_positive) return CurveShape::Convex;
  if (has_negative) return CurveShape::Concave;
  return CurveShape::Linear;
}

}  // namespace cimetrics
