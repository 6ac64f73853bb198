#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lpq/exponent.hpp"
#include "lpq/measure.hpp"
#include "lpq/sampled_function.hpp"

namespace lpq {

/// Hardy averaging operator on a positive half-line grid. The cells of f are
/// laid out consecutively from x0, and (Hf)(x_i) = (1/x_i) sum_{j<=i} v_j m_j
/// is evaluated at cell right endpoints (a lower Riemann approximation for
/// decreasing data). x0 < 0 puts grid points at x <= 0 and is a domain error.
SampledFunction hardy_apply(const SampledFunction& f, double x0 = 0.0);

/// Near-extremal Hardy input x^(-1/p + eps) on a geometric grid over
/// (delta, 1]. Refinement levels 1..3 shrink delta and refine the grid.
SampledFunction hardy_extremal_input(double p, double eps, int refinement_level = 3);

struct HardyRatioRow {
  double p;
  double eps;
  double ratio;  // ||Hf_eps||_p / ||f_eps||_p
  double bound;  // p/(p-1)
};

/// Ratio sweep against the sharp constant p/(p-1). Ratios stay below the
/// bound and increase toward it as eps decreases. p <= 1 is rejected: the
/// operator is unbounded at that endpoint.
std::vector<HardyRatioRow> hardy_ratio_sweep(double p, const std::vector<double>& eps_list,
                                             int refinement_level = 3);

/// Periodic discrete convolution with a kernel on a uniform grid, scaled by
/// the cell measure (a Riemann-sum convolution).
class DiscreteConvolution {
 public:
  explicit DiscreteConvolution(SampledFunction kernel);
  const SampledFunction& kernel() const { return kernel_; }
  double kernel_mass() const;  // ||k||_1, the exact L1->L1 norm for k >= 0
  SampledFunction apply(const SampledFunction& f) const;

 private:
  SampledFunction kernel_;
};

SampledFunction convolve(const DiscreteConvolution& op, const SampledFunction& f);

/// A linear operator together with its own input-candidate machinery, so the
/// norm estimator and the interpolation harness can sample it.
struct OperatorHandle {
  std::string name;
  std::function<SampledFunction(const SampledFunction&)> apply;
  std::function<SampledFunction(std::uint64_t)> random_input;
  std::vector<SampledFunction> structured_candidates;
};

struct NormEstimate {
  double lower_bound = 0.0;
  std::optional<SampledFunction> witness;
  int samples_used = 0;
  std::uint64_t seed = 0;
};

/// Empirical lower bound for ||T||_{p_in -> q_out}: the max of
/// ||Tf||_{q_out} / ||f||_{p_in} over the structured candidate library and
/// n_samples seeded random inputs. Deterministic given (seed, n_samples):
/// sample i uses an independent substream keyed by (seed, i), so the
/// max-reduction is order-independent.
NormEstimate estimate_operator_norm(const OperatorHandle& T, const Exponent& p_in,
                                    const Exponent& q_out, int n_samples, std::uint64_t seed);

// Ready-made handles.
OperatorHandle make_identity_operator(std::size_t cells = 64, double total_measure = 1.0);
OperatorHandle make_convolution_operator(DiscreteConvolution op, std::string name = "convolution");
OperatorHandle make_hardy_operator(int refinement_level = 2);

/// Seeded random simple function on a fresh random grid (up to max_cells).
SampledFunction random_simple_function(std::uint64_t seed, std::size_t max_cells = 40);

/// Seeded random values on an existing grid (shared-grid pairs, operator inputs).
SampledFunction random_values_on_measures(std::uint64_t seed, std::span<const double> measures);

/// Deterministic substream key for sample index i.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace lpq
