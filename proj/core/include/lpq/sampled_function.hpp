#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lpq {

/// Quadrature policy for sampling builtin function families onto cells.
/// CellSum keeps one midpoint sample per cell; RefinedMidpoint splits every
/// cell into `refinement` equal subcells before sampling.
struct Quadrature {
  enum class Scheme { CellSum, RefinedMidpoint };
  Scheme scheme = Scheme::CellSum;
  int refinement = 1;  // >= 1

  static Quadrature cell_sum() { return {}; }
  static Quadrature refined(int level);
};

/// A nonnegative-measure simple function: one value per cell plus the cell's
/// measure. This is the computable stand-in for a measurable function on a
/// sigma-finite space; cell values are exact, so a.e. equivalence classes are
/// collapsed by construction. Values must be nonnegative unless the signed
/// flag is set (needed for real/imaginary parts of dispersive fields); norms
/// always act on |value|.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> values, std::vector<double> measures,
                  std::string label = "", bool allow_signed = false);

  std::span<const double> values() const { return values_; }
  std::span<const double> measures() const { return measures_; }
  const std::string& label() const { return label_; }
  bool signed_values() const { return signed_; }
  std::size_t size() const { return values_.size(); }
  double total_measure() const { return total_measure_; }
  double max_abs() const;

  /// Same cells, value |v|.
  SampledFunction abs() const;
  SampledFunction scaled(double c) const;

  /// Cellwise sum; requires identical measure vectors (a shared grid).
  friend SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);

  /// True when every cell has the same measure.
  bool uniform() const;

  // Common constructions.
  static SampledFunction indicator(double measure, double height = 1.0);
  static SampledFunction constant(double value, std::size_t cells, double total_measure);

 private:
  std::vector<double> values_;
  std::vector<double> measures_;
  std::string label_;
  bool signed_ = false;
  double total_measure_ = 0.0;
};

/// Builtin families for the JSON function-spec format, sampled at cell
/// midpoints of a uniform grid over [a, b].
struct BuiltinSpec {
  enum class Family { Indicator, Power, Gaussian, Bump };
  Family family = Family::Indicator;
  double domain_lo = 0.0;
  double domain_hi = 1.0;
  std::size_t cells = 128;

  // Family parameters (unused entries ignored):
  double lo = 0.0, hi = 1.0;                     // indicator of [lo, hi]
  double exponent = 1.0, coefficient = 1.0;      // power: c * x^a
  double center = 0.0, sigma = 1.0, amplitude = 1.0;  // gaussian
  double width = 1.0;                            // bump support width
  bool l1_normalize = false;                     // bump: scale to unit mass
};

SampledFunction sample_builtin(const BuiltinSpec& spec, const Quadrature& quad = {});

/// Geometric (log-spaced) grid on (lo, hi], sampling f at per-cell geometric
/// midpoints; the natural discretization for power-law data.
SampledFunction sample_power_geometric(double exponent, double lo, double hi,
                                       std::size_t cells, double coefficient = 1.0,
                                       std::string label = "");

}  // namespace lpq
