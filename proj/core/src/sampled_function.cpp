#include "lpq/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpq {

Quadrature Quadrature::refined(int level) {
  if (level < 1) throw std::domain_error("Quadrature: refinement level must be >= 1");
  return Quadrature{Scheme::RefinedMidpoint, level};
}

SampledFunction::SampledFunction(std::vector<double> values, std::vector<double> measures,
                                 std::string label, bool allow_signed)
    : values_(std::move(values)), measures_(std::move(measures)), label_(std::move(label)),
      signed_(allow_signed) {
  if (values_.empty() || values_.size() != measures_.size()) {
    throw std::invalid_argument("SampledFunction: values and measures must have identical positive length");
  }
  for (double m : measures_) {
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw std::invalid_argument("SampledFunction: every cell measure must be positive and finite");
    }
    total_measure_ += m;
  }
  if (!std::isfinite(total_measure_)) {
    throw std::invalid_argument("SampledFunction: total measure must be finite");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("SampledFunction: cell values must be finite");
    if (!signed_ && v < 0.0) {
      throw std::invalid_argument("SampledFunction: negative value without the signed flag");
    }
  }
}

double SampledFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

SampledFunction SampledFunction::abs() const {
  std::vector<double> v(values_.begin(), values_.end());
  for (double& x : v) x = std::fabs(x);
  return SampledFunction(std::move(v), measures_, label_, false);
}

SampledFunction SampledFunction::scaled(double c) const {
  std::vector<double> v(values_.begin(), values_.end());
  for (double& x : v) x *= c;
  return SampledFunction(std::move(v), measures_, label_, signed_ || c < 0.0);
}

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
  if (a.measures_ != b.measures_) {
    throw std::invalid_argument("SampledFunction: cellwise sum requires a shared grid");
  }
  std::vector<double> v(a.values_.begin(), a.values_.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return SampledFunction(std::move(v), a.measures_, a.label_ + "+" + b.label_,
                         a.signed_ || b.signed_);
}

bool SampledFunction::uniform() const {
  return std::all_of(measures_.begin(), measures_.end(),
                     [&](double m) { return m == measures_.front(); });
}

SampledFunction SampledFunction::indicator(double measure, double height) {
  if (!(measure > 0.0)) throw std::domain_error("indicator: measure must be positive");
  return SampledFunction({height}, {measure}, "indicator");
}

SampledFunction SampledFunction::constant(double value, std::size_t cells, double total_measure) {
  if (cells == 0 || !(total_measure > 0.0)) {
    throw std::domain_error("constant: need cells >= 1 and positive total measure");
  }
  return SampledFunction(std::vector<double>(cells, value),
                         std::vector<double>(cells, total_measure / static_cast<double>(cells)),
                         "constant");
}

namespace {

double eval_family(const BuiltinSpec& s, double x) {
  using F = BuiltinSpec::Family;
  switch (s.family) {
    case F::Indicator:
      return (x >= s.lo && x <= s.hi) ? 1.0 : 0.0;
    case F::Power:
      return s.coefficient * std::pow(x, s.exponent);
    case F::Gaussian: {
      double u = (x - s.center) / s.sigma;
      return s.amplitude * std::exp(-0.5 * u * u);
    }
    case F::Bump: {
      double u = (x - s.center) / (0.5 * s.width);
      if (std::fabs(u) >= 1.0) return 0.0;
      return std::exp(-1.0 / (1.0 - u * u));
    }
  }
  throw std::logic_error("eval_family: unknown family");
}

}  // namespace

SampledFunction sample_builtin(const BuiltinSpec& spec, const Quadrature& quad) {
  if (spec.cells == 0) throw std::invalid_argument("sample_builtin: cells must be positive");
  if (!(spec.domain_hi > spec.domain_lo)) {
    throw std::invalid_argument("sample_builtin: domain must have positive length");
  }
  std::size_t n = spec.cells;
  if (quad.scheme == Quadrature::Scheme::RefinedMidpoint) {
    if (quad.refinement < 1) throw std::domain_error("sample_builtin: refinement level must be >= 1");
    n *= static_cast<std::size_t>(quad.refinement);
  }
  const double h = (spec.domain_hi - spec.domain_lo) / static_cast<double>(n);
  std::vector<double> values(n), measures(n, h);
  for (std::size_t i = 0; i < n; ++i) {
    double mid = spec.domain_lo + (static_cast<double>(i) + 0.5) * h;
    values[i] = eval_family(spec, mid);
  }
  SampledFunction f(std::move(values), std::move(measures), "builtin");
  if (spec.family == BuiltinSpec::Family::Bump && spec.l1_normalize) {
    double mass = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) mass += f.values()[i] * f.measures()[i];
    if (mass > 0.0) return f.scaled(1.0 / mass);
  }
  return f;
}

SampledFunction sample_power_geometric(double exponent, double lo, double hi,
                                       std::size_t cells, double coefficient,
                                       std::string label) {
  if (!(lo > 0.0) || !(hi > lo)) {
    throw std::domain_error("sample_power_geometric: need 0 < lo < hi");
  }
  if (cells == 0) throw std::invalid_argument("sample_power_geometric: cells must be positive");
  const double ratio = hi / lo;
  std::vector<double> values(cells), measures(cells);
  double left = lo;
  for (std::size_t i = 0; i < cells; ++i) {
    double right = lo * std::pow(ratio, static_cast<double>(i + 1) / static_cast<double>(cells));
    double mid = std::sqrt(left * right);
    values[i] = coefficient * std::pow(mid, exponent);
    measures[i] = right - left;
    left = right;
  }
  return SampledFunction(std::move(values), std::move(measures), std::move(label));
}

}  // namespace lpq
