#pragma once

#include <cmath>

namespace lpq::detail {

// int_{t0}^{t1} t^{alpha - 1} dt, stable as alpha -> 0 (limit ln(t1/t0)).
inline double power_integral(double t0, double t1, double alpha) {
  if (std::fabs(alpha) < 1e-8) {
    double l0 = std::log(t0), l1 = std::log(t1);
    return std::exp(alpha * l0) *
           ((alpha == 0.0) ? (l1 - l0) : std::expm1(alpha * (l1 - l0)) / alpha);
  }
  return (std::pow(t1, alpha) - std::pow(t0, alpha)) / alpha;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace lpq::detail
