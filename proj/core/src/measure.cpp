#include "lpq/measure.hpp"

#include <cmath>

namespace lpq {

double integrate(const SampledFunction& f) {
  double s = 0.0;
  auto v = f.values();
  auto m = f.measures();
  for (std::size_t i = 0; i < f.size(); ++i) s += v[i] * m[i];
  return s;
}

double lebesgue_norm(const SampledFunction& f, const Exponent& p) {
  if (p.is_inf()) return f.max_abs();
  const double pv = p.value();
  auto v = f.values();
  auto m = f.measures();
  if (pv == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::fabs(v[i]) * m[i];
    return s;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += std::pow(std::fabs(v[i]), pv) * m[i];
  return std::pow(s, 1.0 / pv);
}

}  // namespace lpq
