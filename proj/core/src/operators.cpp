#include "lpq/operators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lpq {

namespace {

struct RefinementParams {
  double delta;
  std::size_t cells;
};

RefinementParams hardy_refinement(int level) {
  switch (level) {
    case 1: return {1e-6, 2000};
    case 2: return {1e-11, 4000};
    case 3: return {1e-20, 8000};
    default:
      throw std::domain_error("hardy refinement level must be 1, 2 or 3");
  }
}

}  // namespace

SampledFunction hardy_apply(const SampledFunction& f, double x0) {
  if (x0 < 0.0) {
    throw std::domain_error("hardy_apply: grid must lie on the positive half-line (x0 >= 0)");
  }
  auto v = f.values();
  auto m = f.measures();
  std::vector<double> out(f.size());
  double prefix = 0.0;
  double x = x0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (v[i] < 0.0) throw std::domain_error("hardy_apply: input must be nonnegative");
    prefix += v[i] * m[i];
    x += m[i];
    out[i] = prefix / x;
  }
  return SampledFunction(std::move(out), {m.begin(), m.end()}, "H(" + f.label() + ")");
}

SampledFunction hardy_extremal_input(double p, double eps, int refinement_level) {
  if (!(p > 1.0)) throw std::domain_error("hardy_extremal_input: requires p > 1");
  if (!(eps > 0.0)) throw std::domain_error("hardy_extremal_input: requires eps > 0");
  auto params = hardy_refinement(refinement_level);
  return sample_power_geometric(-1.0 / p + eps, params.delta, 1.0, params.cells, 1.0,
                                "hardy_extremal");
}

std::vector<HardyRatioRow> hardy_ratio_sweep(double p, const std::vector<double>& eps_list,
                                             int refinement_level) {
  if (!(p > 1.0)) {
    throw std::domain_error("hardy_ratio_sweep: unbounded endpoint, the operator norm blows up as p -> 1");
  }
  auto params = hardy_refinement(refinement_level);
  std::vector<HardyRatioRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) {
    if (!(eps > 0.0)) throw std::domain_error("hardy_ratio_sweep: each eps must be positive");
    SampledFunction f = hardy_extremal_input(p, eps, refinement_level);
    SampledFunction hf = hardy_apply(f, params.delta);
    double ratio = lebesgue_norm(hf, Exponent(p)) / lebesgue_norm(f, Exponent(p));
    rows.push_back({p, eps, ratio, p / (p - 1.0)});
  }
  return rows;
}

DiscreteConvolution::DiscreteConvolution(SampledFunction kernel) : kernel_(std::move(kernel)) {
  if (!kernel_.uniform()) {
    throw std::invalid_argument("DiscreteConvolution: kernel grid must be uniform");
  }
}

double DiscreteConvolution::kernel_mass() const {
  double s = 0.0;
  for (std::size_t i = 0; i < kernel_.size(); ++i) {
    s += std::fabs(kernel_.values()[i]) * kernel_.measures()[i];
  }
  return s;
}

SampledFunction DiscreteConvolution::apply(const SampledFunction& f) const {
  if (f.size() != kernel_.size() || f.measures()[0] != kernel_.measures()[0] || !f.uniform()) {
    throw std::invalid_argument("DiscreteConvolution: input grid does not match the kernel grid");
  }
  const std::size_t n = f.size();
  const double h = kernel_.measures()[0];
  auto k = kernel_.values();
  auto v = f.values();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += k[j] * v[(i + n - j) % n];
    }
    out[i] = s * h;
  }
  return SampledFunction(std::move(out), {f.measures().begin(), f.measures().end()},
                         "k*" + f.label(), true);
}

SampledFunction convolve(const DiscreteConvolution& op, const SampledFunction& f) {
  return op.apply(f);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step on seed xor golden-ratio-stride index
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SampledFunction random_simple_function(std::uint64_t seed, std::size_t max_cells) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> count(1, max_cells);
  std::exponential_distribution<double> measure(2.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::size_t n = count(rng);
  std::vector<double> values(n), measures(n);
  for (std::size_t i = 0; i < n; ++i) {
    measures[i] = 1e-3 + measure(rng);
    double u = unif(rng);
    if (u < 0.15) {
      values[i] = 0.0;  // keep some genuinely empty cells
    } else if (u < 0.3) {
      values[i] = std::exp(3.0 * unif(rng));  // occasional spikes
    } else {
      values[i] = unif(rng);
    }
  }
  return SampledFunction(std::move(values), std::move(measures), "random");
}

SampledFunction random_values_on_measures(std::uint64_t seed, std::span<const double> measures) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 3);
  const std::size_t n = measures.size();
  std::vector<double> values(n, 0.0);
  switch (kind(rng)) {
    case 0: {  // iid amplitudes
      for (auto& x : values) x = unif(rng);
      break;
    }
    case 1: {  // block indicator
      std::size_t lo = static_cast<std::size_t>(unif(rng) * static_cast<double>(n));
      std::size_t len = 1 + static_cast<std::size_t>(unif(rng) * static_cast<double>(n - 1));
      for (std::size_t i = 0; i < len; ++i) values[(lo + i) % n] = 1.0;
      break;
    }
    case 2: {  // near point mass
      values[static_cast<std::size_t>(unif(rng) * static_cast<double>(n)) % n] =
          1.0 / measures[0];
      break;
    }
    default: {  // spiky mixture
      for (auto& x : values) {
        double u = unif(rng);
        x = (u < 0.1) ? std::exp(4.0 * unif(rng)) : u * u;
      }
      break;
    }
  }
  return SampledFunction(std::move(values), {measures.begin(), measures.end()}, "random");
}

NormEstimate estimate_operator_norm(const OperatorHandle& T, const Exponent& p_in,
                                    const Exponent& q_out, int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::domain_error("estimate_operator_norm: n_samples must be >= 1");
  NormEstimate est;
  est.seed = seed;
  auto consider = [&](const SampledFunction& f) {
    double denom = lebesgue_norm(f, p_in);
    if (!(denom > 0.0) || !std::isfinite(denom)) return;
    double ratio = lebesgue_norm(T.apply(f), q_out) / denom;
    ++est.samples_used;
    if (ratio > est.lower_bound) {
      est.lower_bound = ratio;
      est.witness = f;
    }
  };
  for (const auto& f : T.structured_candidates) consider(f);
  for (int i = 0; i < n_samples; ++i) consider(T.random_input(mix_seed(seed, static_cast<std::uint64_t>(i))));
  return est;
}

OperatorHandle make_identity_operator(std::size_t cells, double total_measure) {
  std::vector<double> measures(cells, total_measure / static_cast<double>(cells));
  OperatorHandle h;
  h.name = "identity";
  h.apply = [](const SampledFunction& f) { return f; };
  h.random_input = [measures](std::uint64_t s) {
    return random_values_on_measures(s, measures);
  };
  h.structured_candidates.push_back(
      SampledFunction(std::vector<double>(cells, 1.0), measures, "ones"));
  return h;
}

OperatorHandle make_convolution_operator(DiscreteConvolution op, std::string name) {
  std::vector<double> measures(op.kernel().measures().begin(), op.kernel().measures().end());
  OperatorHandle h;
  h.name = std::move(name);
  h.apply = [op](const SampledFunction& f) { return op.apply(f); };
  h.random_input = [measures](std::uint64_t s) {
    return random_values_on_measures(s, measures);
  };
  const std::size_t n = measures.size();
  // Point mass realizes ||k||_1 for L1 -> L1; the flat input realizes it for
  // Linf -> Linf when the kernel is nonnegative.
  std::vector<double> delta(n, 0.0);
  delta[0] = 1.0 / measures[0];
  h.structured_candidates.push_back(SampledFunction(delta, measures, "point_mass"));
  h.structured_candidates.push_back(SampledFunction(std::vector<double>(n, 1.0), measures, "ones"));
  return h;
}

OperatorHandle make_hardy_operator(int refinement_level) {
  auto params = hardy_refinement(refinement_level);
  OperatorHandle h;
  h.name = "hardy";
  const double delta = params.delta;
  h.apply = [delta](const SampledFunction& f) { return hardy_apply(f, delta); };
  h.random_input = [params](std::uint64_t s) {
    // Random data on the same geometric grid the extremal family lives on.
    SampledFunction shape = sample_power_geometric(0.0, params.delta, 1.0, params.cells);
    return random_values_on_measures(s, shape.measures());
  };
  for (double p : {2.0, 1.5, 1.25, 1.1}) {
    for (double eps : {0.05, 0.02, 0.01, 0.005}) {
      h.structured_candidates.push_back(hardy_extremal_input(p, eps, refinement_level));
    }
  }
  return h;
}

}  // namespace lpq
