#include "lpq/interpolate.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "lpq/lorentz.hpp"
#include "lpq/measure.hpp"
#include "segment_quadrature.hpp"

namespace lpq {

namespace {

using detail::binomial;
using detail::power_integral;

// K(t) = alpha + slope * t on [t_lo, t_hi].
struct KSegment {
  double t_lo, t_hi, alpha, slope;
};

std::vector<KSegment> k_segments(const RearrangementProfile& prof) {
  std::vector<KSegment> segs;
  auto bps = prof.breakpoints();
  auto lvl = prof.levels();
  double prev_t = 0.0;
  double integral = 0.0;
  for (std::size_t j = 0; j < lvl.size(); ++j) {
    segs.push_back({prev_t, bps[j], integral - lvl[j] * prev_t, lvl[j]});
    integral += lvl[j] * (bps[j] - prev_t);
    prev_t = bps[j];
  }
  return segs;  // past the support K is the constant `integral`
}

}  // namespace

InterpIndex::InterpIndex(double theta_, Exponent q_) : theta(theta_), q(std::move(q_)) {
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw std::domain_error("InterpIndex: theta must lie strictly inside (0, 1)");
  }
}

EndpointBound EndpointBound::analytic(Exponent p_in, Exponent q_out, double M,
                                      std::string formula) {
  if (!(M > 0.0)) throw std::domain_error("EndpointBound: M must be positive");
  if (formula.empty()) throw std::invalid_argument("EndpointBound: analytic bound needs a formula tag");
  return {std::move(p_in), std::move(q_out), M, Provenance::Analytic, std::move(formula)};
}

EndpointBound EndpointBound::estimated(Exponent p_in, Exponent q_out, double M) {
  if (!(M > 0.0)) throw std::domain_error("EndpointBound: M must be positive");
  return {std::move(p_in), std::move(q_out), M, Provenance::Estimated, ""};
}

double k_exact(const RearrangementProfile& prof, double t) {
  if (!(t > 0.0)) throw std::domain_error("k_exact: t must be positive");
  return prof.integral_to(t);
}

double k_exact(const SampledFunction& f, double t) {
  return k_exact(decreasing_rearrangement(f), t);
}

KCurve make_k_curve(const SampledFunction& f, std::span<const double> ts) {
  auto prof = decreasing_rearrangement(f);
  KCurve curve;
  double prev_t = 0.0;
  for (double t : ts) {
    if (!(t > prev_t)) throw std::invalid_argument("make_k_curve: t grid must be increasing and positive");
    prev_t = t;
    curve.t_values.push_back(t);
    curve.k_values.push_back(k_exact(prof, t));
  }
  // Shape laws are theorems for K; a violation is a defect, not data.
  for (std::size_t i = 1; i < curve.t_values.size(); ++i) {
    if (curve.k_values[i] + 1e-12 < curve.k_values[i - 1]) {
      throw std::logic_error("make_k_curve: K must be nondecreasing");
    }
    double slope_i = curve.k_values[i] / curve.t_values[i];
    double slope_im1 = curve.k_values[i - 1] / curve.t_values[i - 1];
    if (slope_i > slope_im1 * (1.0 + 1e-12) + 1e-15) {
      throw std::logic_error("make_k_curve: K(t)/t must be nonincreasing");
    }
  }
  for (std::size_t i = 2; i < curve.t_values.size(); ++i) {
    // concavity at the sample triple (i-2, i-1, i)
    double t0 = curve.t_values[i - 2], t1 = curve.t_values[i - 1], t2 = curve.t_values[i];
    double chord = curve.k_values[i - 2] +
                   (curve.k_values[i] - curve.k_values[i - 2]) * (t1 - t0) / (t2 - t0);
    if (curve.k_values[i - 1] + 1e-10 * (1.0 + std::fabs(chord)) < chord) {
      throw std::logic_error("make_k_curve: K must be concave");
    }
  }
  return curve;
}

double k_optimized(const SampledFunction& f, double t, int lambda_grid_size) {
  if (!(t > 0.0)) throw std::domain_error("k_optimized: t must be positive");
  if (lambda_grid_size < 2) throw std::domain_error("k_optimized: lambda grid size must be >= 2");

  std::set<double> base{0.0};
  for (double v : f.values()) base.insert(std::fabs(v));
  std::vector<double> candidates(base.begin(), base.end());
  std::vector<double> lambdas = candidates;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    for (int k = 1; k < lambda_grid_size; ++k) {
      lambdas.push_back(candidates[i - 1] + (candidates[i] - candidates[i - 1]) *
                                                static_cast<double>(k) /
                                                static_cast<double>(lambda_grid_size));
    }
  }

  const double top = f.max_abs();
  auto v = f.values();
  auto m = f.measures();
  double best = std::numeric_limits<double>::infinity();
  for (double lambda : lambdas) {
    double l1_excess = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      double excess = std::fabs(v[i]) - lambda;
      if (excess > 0.0) l1_excess += excess * m[i];
    }
    best = std::min(best, l1_excess + t * std::min(lambda, top));
  }
  return best;
}

double real_interp_norm(const SampledFunction& f, const InterpIndex& idx) {
  auto prof = decreasing_rearrangement(f);
  if (prof.empty()) return 0.0;
  const double theta = idx.theta;
  auto segs = k_segments(prof);
  const double l1 = prof.total_integral();
  const double t_end = prof.support_measure();

  if (idx.q.is_inf()) {
    // Segmentwise, t^{-theta}(alpha + slope t) has no interior maximum, and
    // K is continuous, so the sup over (0, inf) sits at a breakpoint.
    double best = 0.0;
    for (const auto& s : segs) {
      best = std::max(best, std::pow(s.t_hi, -theta) * (s.alpha + s.slope * s.t_hi));
    }
    return best;
  }

  const double q = idx.q.value();
  const bool q_is_integer = (idx.q.as_rational().denominator() == 1);
  double total = 0.0;
  for (const auto& s : segs) {
    if (s.t_lo == 0.0) {
      // alpha = 0: pure power, q(1 - theta) > 0 so the origin is integrable.
      total += std::pow(s.slope, q) * std::pow(s.t_hi, q * (1.0 - theta)) / (q * (1.0 - theta));
    } else if (s.slope == 0.0) {
      total += std::pow(s.alpha, q) * power_integral(s.t_lo, s.t_hi, -theta * q);
    } else if (q_is_integer) {
      int qi = static_cast<int>(std::lround(q));
      for (int j = 0; j <= qi; ++j) {
        total += binomial(qi, j) * std::pow(s.alpha, qi - j) * std::pow(s.slope, j) *
                 power_integral(s.t_lo, s.t_hi, static_cast<double>(j) - theta * q);
      }
    } else {
      auto integrand = [&](double t) {
        return std::pow(t, -theta * q - 1.0) * std::pow(s.alpha + s.slope * t, q);
      };
      total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, s.t_lo,
                                                                             s.t_hi, 10, 1e-13);
    }
  }
  // Tail: K = ||f||_1 for t >= support measure.
  total += std::pow(l1, q) * std::pow(t_end, -theta * q) / (theta * q);
  return std::pow(total, 1.0 / q);
}

EquivalenceReport lorentz_equivalence_report(std::span<const SampledFunction> family,
                                             double theta, const Exponent& q) {
  if (family.empty()) throw std::invalid_argument("lorentz_equivalence_report: family is empty");
  InterpIndex idx(theta, q);
  EquivalenceReport report;
  report.theta = theta;
  report.q = q;
  report.p = 1.0 / (1.0 - theta);
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = 0.0;
  LorentzIndex lorentz_idx(report.p, q);
  for (const auto& f : family) {
    double in = real_interp_norm(f, idx);
    double ln = q.is_inf() ? weak_norm(f, report.p) : lorentz_norm(f, lorentz_idx);
    double ratio = (ln > 0.0) ? in / ln : 0.0;
    report.rows.push_back({in, ln, ratio});
    if (ln > 0.0) {
      report.min_ratio = std::min(report.min_ratio, ratio);
      report.max_ratio = std::max(report.max_ratio, ratio);
    }
  }
  return report;
}

std::pair<Exponent, Exponent> riesz_thorin_exponents(const Exponent& p0, const Exponent& q0,
                                                     const Exponent& p1, const Exponent& q1,
                                                     double theta) {
  if (!(theta >= 0.0) || !(theta <= 1.0)) {
    throw std::domain_error("riesz_thorin_exponents: theta must lie in [0, 1]");
  }
  Rational th = rational_from_double(theta);
  Rational one(1);
  Rational rp = (one - th) * p0.reciprocal() + th * p1.reciprocal();
  Rational rq = (one - th) * q0.reciprocal() + th * q1.reciprocal();
  return {Exponent::from_reciprocal(rp), Exponent::from_reciprocal(rq)};
}

GeometricMeanReport verify_geometric_mean_bound(const OperatorHandle& T, const EndpointBound& e0,
                                                const EndpointBound& e1, double theta,
                                                int n_samples, std::uint64_t seed) {
  if (e0.provenance != EndpointBound::Provenance::Analytic ||
      e1.provenance != EndpointBound::Provenance::Analytic) {
    throw std::invalid_argument(
        "verify_geometric_mean_bound: endpoint bounds must be analytic; an estimated endpoint "
        "is a lower bound and cannot certify an upper bound");
  }
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw std::domain_error("verify_geometric_mean_bound: theta must lie in (0, 1)");
  }
  if (n_samples < 1) throw std::domain_error("verify_geometric_mean_bound: n_samples must be >= 1");

  GeometricMeanReport report;
  auto [p_theta, q_theta] = riesz_thorin_exponents(e0.p_in, e0.q_out, e1.p_in, e1.q_out, theta);
  report.p_theta = p_theta;
  report.q_theta = q_theta;
  report.bound = std::pow(e0.M, 1.0 - theta) * std::pow(e1.M, theta);

  auto consider = [&](const SampledFunction& f) {
    double denom = lebesgue_norm(f, p_theta);
    if (!(denom > 0.0) || !std::isfinite(denom)) return;
    double ratio = lebesgue_norm(T.apply(f), q_theta) / denom;
    ++report.samples_used;
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.witness = f;
    }
  };
  for (const auto& f : T.structured_candidates) consider(f);
  for (int i = 0; i < n_samples; ++i) {
    consider(T.random_input(mix_seed(seed, static_cast<std::uint64_t>(i))));
  }
  report.pass = report.max_ratio <= report.bound * (1.0 + 1e-9);
  return report;
}

}  // namespace lpq
