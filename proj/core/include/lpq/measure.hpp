#pragma once

#include "lpq/exponent.hpp"
#include "lpq/sampled_function.hpp"

namespace lpq {

/// Sum of value * measure over cells; exact for simple functions, and linear.
double integrate(const SampledFunction& f);

/// (sum |v|^p m)^(1/p) for finite p, max |v| for p = inf. p < 1 is rejected
/// at Exponent construction.
double lebesgue_norm(const SampledFunction& f, const Exponent& p);

}  // namespace lpq
