#include "lpq/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lpq {

RearrangementProfile::RearrangementProfile(std::vector<double> breakpoints,
                                           std::vector<double> levels)
    : breakpoints_(std::move(breakpoints)), levels_(std::move(levels)) {
  if (breakpoints_.size() != levels_.size()) {
    throw std::invalid_argument("RearrangementProfile: breakpoints/levels size mismatch");
  }
  double prev_t = 0.0;
  double prev_l = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (!(breakpoints_[j] > prev_t)) {
      throw std::invalid_argument("RearrangementProfile: breakpoints must be strictly increasing");
    }
    if (!(levels_[j] >= 0.0) || levels_[j] > prev_l) {
      throw std::invalid_argument("RearrangementProfile: levels must be non-increasing and nonnegative");
    }
    prev_t = breakpoints_[j];
    prev_l = levels_[j];
  }
  cum_integral_.resize(levels_.size());
  double acc = 0.0;
  prev_t = 0.0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    acc += levels_[j] * (breakpoints_[j] - prev_t);
    cum_integral_[j] = acc;
    prev_t = breakpoints_[j];
  }
}

double RearrangementProfile::value_at(double t) const {
  if (t < 0.0) throw std::domain_error("RearrangementProfile::value_at: t must be >= 0");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.end()) return 0.0;
  return levels_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double RearrangementProfile::integral_to(double t) const {
  if (t < 0.0) throw std::domain_error("RearrangementProfile::integral_to: t must be >= 0");
  if (levels_.empty() || t == 0.0) return 0.0;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.end()) return cum_integral_.back();
  auto j = static_cast<std::size_t>(it - breakpoints_.begin());
  double seg_start = (j == 0) ? 0.0 : breakpoints_[j - 1];
  double before = (j == 0) ? 0.0 : cum_integral_[j - 1];
  return before + levels_[j] * (t - seg_start);
}

double RearrangementProfile::total_integral() const {
  return cum_integral_.empty() ? 0.0 : cum_integral_.back();
}

double RearrangementProfile::lp_norm(const Exponent& p) const {
  if (p.is_inf()) return sup_level();
  const double pv = p.value();
  double s = 0.0;
  double prev = 0.0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    s += std::pow(levels_[j], pv) * (breakpoints_[j] - prev);
    prev = breakpoints_[j];
  }
  return std::pow(s, 1.0 / pv);
}

double RearrangementProfile::distribution(double alpha) const {
  if (alpha < 0.0) throw std::domain_error("RearrangementProfile::distribution: alpha must be >= 0");
  // levels are decreasing in t, so {f* > alpha} = [0, t_j) for the last j
  // with level > alpha.
  double result = 0.0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (levels_[j] > alpha) result = breakpoints_[j];
  }
  return result;
}

double distribution_function(const SampledFunction& f, double alpha) {
  if (alpha < 0.0) throw std::domain_error("distribution_function: alpha must be >= 0");
  double s = 0.0;
  auto v = f.values();
  auto m = f.measures();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::fabs(v[i]) > alpha) s += m[i];
  }
  return s;
}

RearrangementProfile decreasing_rearrangement(const SampledFunction& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto v = f.values();
  auto m = f.measures();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(v[a]) > std::fabs(v[b]);
  });

  std::vector<double> breakpoints;
  std::vector<double> levels;
  double cum = 0.0;
  for (std::size_t idx : order) {
    double val = std::fabs(v[idx]);
    if (val == 0.0) break;  // zero cells do not contribute to the support
    cum += m[idx];
    if (!levels.empty() && levels.back() == val) {
      breakpoints.back() = cum;  // ties merge into one segment
    } else {
      levels.push_back(val);
      breakpoints.push_back(cum);
    }
  }
  if (levels.empty()) return RearrangementProfile::empty_profile();
  return RearrangementProfile(std::move(breakpoints), std::move(levels));
}

double maximal_average(const RearrangementProfile& prof, double t) {
  if (!(t > 0.0)) throw std::domain_error("maximal_average: t must be positive");
  return prof.integral_to(t) / t;
}

std::vector<MaximalAverageSegment> maximal_average_segments(const RearrangementProfile& prof) {
  std::vector<MaximalAverageSegment> segs;
  if (prof.empty()) return segs;
  auto bps = prof.breakpoints();
  auto lvl = prof.levels();
  double prev_t = 0.0;
  double prev_integral = 0.0;
  for (std::size_t j = 0; j < lvl.size(); ++j) {
    // On [prev_t, bps[j]): integral(t) = prev_integral + lvl[j]*(t - prev_t),
    // so f**(t) = lvl[j] + (prev_integral - lvl[j]*prev_t)/t.
    segs.push_back({prev_t, bps[j], lvl[j], prev_integral - lvl[j] * prev_t});
    prev_integral += lvl[j] * (bps[j] - prev_t);
    prev_t = bps[j];
  }
  segs.push_back({prev_t, std::numeric_limits<double>::infinity(), 0.0, prev_integral});
  return segs;
}

}  // namespace lpq
