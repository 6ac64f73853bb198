#pragma once

#include <span>
#include <vector>

#include "lpq/exponent.hpp"
#include "lpq/sampled_function.hpp"

namespace lpq {

/// The decreasing rearrangement f* as an explicit step profile:
/// value levels[j] on [breakpoints[j-1], breakpoints[j]) with breakpoints[-1] = 0,
/// and 0 beyond the last breakpoint. Levels are strictly decreasing (equal
/// source values merge into one segment) and zero levels are dropped, so the
/// profile's support is the essential support of |f|.
class RearrangementProfile {
 public:
  /// Validates monotone levels / increasing breakpoints.
  RearrangementProfile(std::vector<double> breakpoints, std::vector<double> levels);

  static RearrangementProfile empty_profile() { return RearrangementProfile(); }

  bool empty() const { return levels_.empty(); }
  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> levels() const { return levels_; }

  /// Total measure of the support (0 for the zero function).
  double support_measure() const { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }

  /// f*(t); right-continuous, 0 for t >= support measure.
  double value_at(double t) const;

  /// Exact step integral of f* over [0, t].
  double integral_to(double t) const;

  /// Integral of f* over the whole support; equals the L1 norm of the source.
  double total_integral() const;

  /// ess-sup of the source, i.e. f*(0).
  double sup_level() const { return levels_.empty() ? 0.0 : levels_.front(); }

  /// Exact Lp norm of the step profile.
  double lp_norm(const Exponent& p) const;

  /// Distribution function of the profile itself (for equimeasurability checks).
  double distribution(double alpha) const;

 private:
  RearrangementProfile() = default;
  std::vector<double> breakpoints_;
  std::vector<double> levels_;
  std::vector<double> cum_integral_;  // integral of f* up to each breakpoint
};

/// mu({ |f| > alpha }), computed by a strict-inequality level-set sum;
/// non-increasing and right-continuous in alpha. alpha < 0 is a domain error.
double distribution_function(const SampledFunction& f, double alpha);

/// Sorts cells by |value| descending and accumulates measures. Satisfies
/// f*(t) = inf{ alpha : d_f(alpha) <= t } everywhere.
RearrangementProfile decreasing_rearrangement(const SampledFunction& f);

/// f**(t) = (1/t) * integral of f* over [0, t]; exact on the step structure.
/// t <= 0 is a domain error.
double maximal_average(const RearrangementProfile& prof, double t);

/// On [t_lo, t_hi) the maximal average is f**(t) = a + b / t. The profile's
/// f** decomposes into one such segment per step plus a tail segment
/// (t_hi = +inf, a = 0, b = total integral) past the support.
struct MaximalAverageSegment {
  double t_lo;
  double t_hi;  // +inf for the tail segment
  double a;
  double b;
};
std::vector<MaximalAverageSegment> maximal_average_segments(const RearrangementProfile& prof);

}  // namespace lpq
