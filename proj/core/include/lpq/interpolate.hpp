#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpq/exponent.hpp"
#include "lpq/operators.hpp"
#include "lpq/rearrange.hpp"
#include "lpq/sampled_function.hpp"

namespace lpq {

/// Real interpolation index: 0 < theta < 1, 1 <= q <= inf.
struct InterpIndex {
  InterpIndex(double theta_, Exponent q_);
  double theta;
  Exponent q;
};

/// A certified endpoint bound ||T||_{p_in -> q_out} <= M. Only analytic
/// bounds (exact formulas such as kernel mass) can anchor a geometric-mean
/// verification; estimated bounds are lower bounds and are refused there.
struct EndpointBound {
  enum class Provenance { Analytic, Estimated };

  static EndpointBound analytic(Exponent p_in, Exponent q_out, double M, std::string formula);
  static EndpointBound estimated(Exponent p_in, Exponent q_out, double M);

  Exponent p_in;
  Exponent q_out;
  double M = 0.0;
  Provenance provenance = Provenance::Estimated;
  std::string formula;  // non-empty exactly when analytic
};

/// Sampled K-functional curve; construction checks the shape laws
/// (K nondecreasing and concave, K(t)/t nonincreasing).
struct KCurve {
  std::vector<double> t_values;
  std::vector<double> k_values;
};
KCurve make_k_curve(const SampledFunction& f, std::span<const double> ts);

/// K(f, t) for the couple (L1, Linf), via the identity with the integrated
/// decreasing rearrangement: K(f,t) = int_0^t f*(s) ds. Exact on steps.
double k_exact(const SampledFunction& f, double t);
double k_exact(const RearrangementProfile& prof, double t);

/// K(f, t) by direct minimization over truncation splits f = f0 + f1 with
/// f1 = clamp(f, lambda): cost ||f0||_1 + t ||f1||_inf over lambda in the
/// distinct |values| plus (lambda_grid_size - 1) refinement points between
/// consecutive candidates. For simple functions the optimum sits at a data
/// value, so this matches k_exact to rounding.
double k_optimized(const SampledFunction& f, double t, int lambda_grid_size = 2);

/// ||f||_{theta,q} = (int_0^inf (t^{-theta} K(f,t))^q dt/t)^{1/q}. K is
/// piecewise linear with breakpoints at cumulative measures; each segment is
/// integrated in closed form for integer q and by adaptive quadrature
/// otherwise, with the analytic tail where K = ||f||_1. q = inf uses the
/// sup form sup_t t^{-theta} K(f,t).
double real_interp_norm(const SampledFunction& f, const InterpIndex& idx);

struct EquivalenceRow {
  double interp_norm;
  double lorentz_norm;
  double ratio;
};
struct EquivalenceReport {
  double theta = 0.5;
  Exponent q = Exponent(1);
  double p = 2.0;  // matched primary index, 1/p = 1 - theta
  std::vector<EquivalenceRow> rows;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

/// Ratio of the (theta, q) interpolation norm to the Lorentz (p, q) norm
/// under the index map 1/p = 1 - theta, over a family of functions. The
/// bracket [min, max] is the empirical equivalence constant.
EquivalenceReport lorentz_equivalence_report(std::span<const SampledFunction> family,
                                             double theta, const Exponent& q);

/// Convex exponent combinations 1/p_theta = (1-theta)/p0 + theta/p1 (and the
/// same for q), exact in rational arithmetic with 1/inf = 0.
std::pair<Exponent, Exponent> riesz_thorin_exponents(const Exponent& p0, const Exponent& q0,
                                                     const Exponent& p1, const Exponent& q1,
                                                     double theta);

struct GeometricMeanReport {
  Exponent p_theta = Exponent(1);
  Exponent q_theta = Exponent(1);
  double bound = 0.0;      // M0^(1-theta) * M1^theta
  double max_ratio = 0.0;  // max ||Tf||_{q_theta} / ||f||_{p_theta} over samples
  std::optional<SampledFunction> witness;
  int samples_used = 0;
  bool pass = false;
};

/// Samples the operator on its structured candidates plus n_samples seeded
/// random inputs and checks every intermediate ratio against the geometric
/// mean of the endpoint norms. Requires analytic endpoints.
GeometricMeanReport verify_geometric_mean_bound(const OperatorHandle& T, const EndpointBound& e0,
                                                const EndpointBound& e1, double theta,
                                                int n_samples, std::uint64_t seed);

}  // namespace lpq
