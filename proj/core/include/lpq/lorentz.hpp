#pragma once

#include <vector>

#include "lpq/exponent.hpp"
#include "lpq/rearrange.hpp"
#include "lpq/sampled_function.hpp"

namespace lpq {

/// Validated Lorentz index pair: 1 <= p < inf, 1 <= q <= inf.
struct LorentzIndex {
  LorentzIndex(double p_, Exponent q_);
  double p;
  Exponent q;
};

/// ||f||_{p,q} = ((q/p) * int_0^inf [t^{1/p} f**(t)]^q dt/t)^{1/q} for finite q.
/// Evaluated segment-by-segment on the piecewise a + b/t structure of f**:
/// closed-form antiderivatives for integer q, adaptive Gauss-Kronrod per
/// segment otherwise, and the analytic tail where f**(t) = ||f||_1 / t.
/// For p = 1 and nonzero f the tail diverges and the represented value is
/// +inf (the function is not in the space; this is data, not an error).
/// q = inf is the weak norm; calling this with q = inf is rejected with a
/// redirect error.
double lorentz_norm(const RearrangementProfile& prof, const LorentzIndex& idx);
double lorentz_norm(const SampledFunction& f, const LorentzIndex& idx);

/// Weak norm sup_{t>0} t^{1/p} f**(t), exact: on each a + b/t segment the
/// supremum of t^{1/p}(a + b/t) is attained at a segment endpoint.
double weak_norm(const RearrangementProfile& prof, double p);
double weak_norm(const SampledFunction& f, double p);

struct NestingRow {
  Exponent q;
  double norm;
  bool finite;
  double ratio_to_weak;  // norm / weak norm; +inf when not finite
};

struct NestingReport {
  double p = 1.0;
  double weak = 0.0;
  std::vector<NestingRow> rows;
  bool finite_to_infinite_transition = false;
};

/// Norms across a sorted ascending list of secondary exponents plus the weak
/// norm, exposing the L_{p,q1} subset L_{p,q2} hierarchy.
NestingReport nesting_report(const SampledFunction& f, double p,
                             const std::vector<Exponent>& qs);

}  // namespace lpq
