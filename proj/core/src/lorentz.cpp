#include "lpq/lorentz.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "segment_quadrature.hpp"

namespace lpq {

namespace {

using detail::binomial;
using detail::power_integral;

constexpr double kInf = std::numeric_limits<double>::infinity();

// int_{t0}^{t1} t^{beta - 1} (a + b/t)^q dt for a segment with t0 > 0.
double segment_integral(double t0, double t1, double a, double b, double beta, double q,
                        bool q_is_integer) {
  if (b == 0.0) {
    return (a == 0.0) ? 0.0 : std::pow(a, q) * power_integral(t0, t1, beta);
  }
  if (a == 0.0) {
    return std::pow(b, q) * power_integral(t0, t1, beta - q);
  }
  if (q_is_integer) {
    int qi = static_cast<int>(std::lround(q));
    double sum = 0.0;
    for (int j = 0; j <= qi; ++j) {
      sum += binomial(qi, j) * std::pow(a, qi - j) * std::pow(b, j) *
             power_integral(t0, t1, beta - static_cast<double>(j));
    }
    return sum;
  }
  auto integrand = [&](double t) { return std::pow(t, beta - 1.0) * std::pow(a + b / t, q); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, t0, t1, 10,
                                                                       1e-13);
}

}  // namespace

LorentzIndex::LorentzIndex(double p_, Exponent q_) : p(p_), q(std::move(q_)) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error("LorentzIndex: p must satisfy 1 <= p < inf");
  }
}

double lorentz_norm(const RearrangementProfile& prof, const LorentzIndex& idx) {
  if (idx.q.is_inf()) {
    throw std::invalid_argument("lorentz_norm: q = inf is the weak norm; call weak_norm(f, p)");
  }
  if (prof.empty()) return 0.0;

  const double q = idx.q.value();
  const double beta = q / idx.p;
  // Tail integrand ~ t^{beta - q - 1}: integrable iff beta < q, i.e. p > 1.
  if (idx.p == 1.0) return kInf;

  const bool q_is_integer = (idx.q.as_rational().denominator() == 1);
  double total = 0.0;
  for (const auto& seg : maximal_average_segments(prof)) {
    if (seg.t_hi == kInf) {
      total += std::pow(seg.b, q) * std::pow(seg.t_lo, beta - q) / (q - beta);
    } else if (seg.t_lo == 0.0) {
      // First segment: f** is the constant top level.
      total += std::pow(seg.a, q) * std::pow(seg.t_hi, beta) / beta;
    } else {
      total += segment_integral(seg.t_lo, seg.t_hi, seg.a, seg.b, beta, q, q_is_integer);
    }
  }
  return std::pow(beta * total, 1.0 / q);
}

double lorentz_norm(const SampledFunction& f, const LorentzIndex& idx) {
  return lorentz_norm(decreasing_rearrangement(f), idx);
}

double weak_norm(const RearrangementProfile& prof, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error("weak_norm: p must satisfy 1 <= p < inf");
  }
  if (prof.empty()) return 0.0;
  // t^{1/p}(a + b/t) has no interior maximum on a segment, so the supremum
  // over (0, inf) is attained at a breakpoint (f** is continuous there).
  double best = 0.0;
  double integral = 0.0;
  double prev = 0.0;
  auto bps = prof.breakpoints();
  auto lvl = prof.levels();
  for (std::size_t j = 0; j < lvl.size(); ++j) {
    integral += lvl[j] * (bps[j] - prev);
    prev = bps[j];
    best = std::max(best, std::pow(bps[j], 1.0 / p) * (integral / bps[j]));
  }
  return best;
}

double weak_norm(const SampledFunction& f, double p) {
  return weak_norm(decreasing_rearrangement(f), p);
}

NestingReport nesting_report(const SampledFunction& f, double p,
                             const std::vector<Exponent>& qs) {
  for (std::size_t i = 1; i < qs.size(); ++i) {
    bool ordered = qs[i].is_inf() || (!qs[i - 1].is_inf() && qs[i - 1].value() <= qs[i].value());
    if (!ordered) throw std::invalid_argument("nesting_report: qs must be sorted ascending");
  }
  auto prof = decreasing_rearrangement(f);
  NestingReport report;
  report.p = p;
  report.weak = weak_norm(prof, p);
  for (const auto& q : qs) {
    double norm = q.is_inf() ? report.weak : lorentz_norm(prof, LorentzIndex(p, q));
    bool finite = std::isfinite(norm);
    double ratio = (report.weak > 0.0) ? norm / report.weak : 0.0;
    if (!report.rows.empty() && report.rows.back().finite != finite) {
      report.finite_to_infinite_transition = true;
    }
    report.rows.push_back({q, norm, finite, ratio});
  }
  return report;
}

}  // namespace lpq
