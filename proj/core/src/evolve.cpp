#include "lpq/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "lpq/lorentz.hpp"
#include "lpq/measure.hpp"

namespace lpq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDecayCheckSlack = 1e-6;
constexpr double kFreqSupportThreshold = 1e-3;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int signed_mode(int k, int n) { return (k < n / 2) ? k : k - n; }

}  // namespace

GridSpec::GridSpec(int dimension, double box_half_length, int points_per_axis)
    : dim(dimension), half_length(box_half_length), n_per_axis(points_per_axis) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("GridSpec: dimension must be 1 or 2");
  if (!(half_length > 0.0)) throw std::invalid_argument("GridSpec: box half-length must be positive");
  if (n_per_axis < 16 || !is_power_of_two(n_per_axis)) {
    throw std::invalid_argument("GridSpec: points per axis must be a power of two, >= 16");
  }
}

std::size_t GridSpec::total_points() const {
  auto n = static_cast<std::size_t>(n_per_axis);
  return (dim == 1) ? n : n * n;
}

double GridSpec::cell_measure() const {
  double h = spacing();
  return (dim == 1) ? h : h * h;
}

std::vector<double> GridSpec::axis_coords() const {
  std::vector<double> x(static_cast<std::size_t>(n_per_axis));
  const double h = spacing();
  for (int j = 0; j < n_per_axis; ++j) x[static_cast<std::size_t>(j)] = -half_length + h * j;
  return x;
}

SpectralField::SpectralField(GridSpec grid, std::vector<std::complex<double>> data,
                             Representation rep)
    : grid_(grid), data_(std::move(data)), rep_(rep) {
  if (data_.size() != grid_.total_points()) {
    throw std::invalid_argument("SpectralField: data length must equal the grid point count");
  }
}

SpectralField SpectralField::from_real(const GridSpec& grid, std::span<const double> samples) {
  if (samples.size() != grid.total_points()) {
    throw std::invalid_argument("SpectralField: sample count must equal the grid point count");
  }
  std::vector<std::complex<double>> data(samples.begin(), samples.end());
  return SpectralField(grid, std::move(data), Representation::Physical);
}

SpectralField SpectralField::to_frequency() const {
  if (rep_ == Representation::Frequency) return *this;
  std::vector<std::complex<double>> data(data_);
  detail::fft(data, grid_.dim, grid_.n_per_axis, /*inverse=*/false);
  return SpectralField(grid_, std::move(data), Representation::Frequency);
}

SpectralField SpectralField::to_physical() const {
  if (rep_ == Representation::Physical) return *this;
  std::vector<std::complex<double>> data(data_);
  detail::fft(data, grid_.dim, grid_.n_per_axis, /*inverse=*/true);
  return SpectralField(grid_, std::move(data), Representation::Physical);
}

double SpectralField::mode_xi_squared(std::size_t i) const {
  const double unit = std::numbers::pi / grid_.half_length;
  const int n = grid_.n_per_axis;
  if (grid_.dim == 1) {
    double xi = unit * signed_mode(static_cast<int>(i), n);
    return xi * xi;
  }
  int row = static_cast<int>(i) / n;
  int col = static_cast<int>(i) % n;
  double xi1 = unit * signed_mode(row, n);
  double xi2 = unit * signed_mode(col, n);
  return xi1 * xi1 + xi2 * xi2;
}

double heat_kernel_value(double t, int n, std::span<const double> x) {
  if (!(t > 0.0)) throw std::domain_error("heat_kernel_value: t must be positive");
  if (n < 1 || static_cast<std::size_t>(n) != x.size()) {
    throw std::invalid_argument("heat_kernel_value: point dimension must match n >= 1");
  }
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  return std::pow(4.0 * std::numbers::pi * t, -0.5 * n) * std::exp(-r2 / (4.0 * t));
}

double heat_kernel_norm(double t, const Exponent& r, int n) {
  if (!(t > 0.0)) throw std::domain_error("heat_kernel_norm: t must be positive");
  if (n < 1) throw std::invalid_argument("heat_kernel_norm: n must be >= 1");
  if (r.is_inf()) return std::pow(4.0 * std::numbers::pi * t, -0.5 * n);
  const double rv = r.value();
  const double decay = 0.5 * n * (1.0 - 1.0 / rv);
  const double c_r = std::pow(4.0 * std::numbers::pi, -decay) * std::pow(rv, -0.5 * n / rv);
  return c_r * std::pow(t, -decay);
}

namespace {

template <typename Multiplier>
SpectralField apply_multiplier(const SpectralField& f, Multiplier&& m) {
  SpectralField freq = f.to_frequency();
  std::vector<std::complex<double>> data(freq.data().begin(), freq.data().end());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= m(freq.mode_xi_squared(i));
  return SpectralField(f.grid(), std::move(data), Representation::Frequency).to_physical();
}

void require_physical(const SpectralField& f, const char* who) {
  if (f.representation() != Representation::Physical) {
    throw std::invalid_argument(std::string(who) + ": input must be in physical representation");
  }
}

}  // namespace

SpectralField heat_propagate(const SpectralField& f, double t) {
  require_physical(f, "heat_propagate");
  if (t < 0.0) throw std::domain_error("heat_propagate: t must be nonnegative");
  if (t == 0.0) return f;
  return apply_multiplier(f, [t](double xi2) { return std::exp(-xi2 * t); });
}

SpectralField schrodinger_propagate(const SpectralField& f, double t) {
  require_physical(f, "schrodinger_propagate");
  if (t == 0.0) return f;
  return apply_multiplier(f, [t](double xi2) { return std::polar(1.0, -xi2 * t); });
}

double field_lp_norm(const SpectralField& u, const Exponent& p) {
  auto data = u.data();
  if (p.is_inf()) {
    double m = 0.0;
    for (const auto& z : data) m = std::max(m, std::abs(z));
    return m;
  }
  const double pv = p.value();
  const double cell = u.grid().cell_measure();
  double s = 0.0;
  for (const auto& z : data) s += std::pow(std::abs(z), pv);
  return std::pow(s * cell, 1.0 / pv);
}

std::complex<double> field_integral(const SpectralField& u) {
  std::complex<double> s = 0.0;
  for (const auto& z : u.data()) s += z;
  return s * u.grid().cell_measure();
}

SampledFunction to_sampled_function(const SpectralField& u, FieldPart part) {
  auto data = u.data();
  std::vector<double> values(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    switch (part) {
      case FieldPart::Magnitude: values[i] = std::abs(data[i]); break;
      case FieldPart::Real: values[i] = data[i].real(); break;
      case FieldPart::Imag: values[i] = data[i].imag(); break;
    }
  }
  std::vector<double> measures(data.size(), u.grid().cell_measure());
  return SampledFunction(std::move(values), std::move(measures), "field",
                         /*allow_signed=*/part != FieldPart::Magnitude);
}

double frequency_support_radius(const SpectralField& f, double threshold) {
  SpectralField freq = f.to_frequency();
  auto data = freq.data();
  double peak = 0.0;
  for (const auto& z : data) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return 0.0;
  double r2 = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (std::abs(data[i]) >= threshold * peak) r2 = std::max(r2, freq.mode_xi_squared(i));
  }
  return std::sqrt(r2);
}

double schrodinger_validity_tmax(const SpectralField& f) {
  double radius = frequency_support_radius(f, kFreqSupportThreshold);
  if (radius == 0.0) return kInf;
  return f.grid().half_length / (4.0 * radius);
}

double boundary_mass_fraction(const SpectralField& u) {
  SpectralField phys = u.to_physical();
  const auto& grid = phys.grid();
  const double guard = grid.half_length * 7.0 / 8.0;
  auto coords = grid.axis_coords();
  auto data = phys.data();
  const int n = grid.n_per_axis;
  double total = 0.0, band = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double mag = std::abs(data[i]);
    total += mag;
    bool in_band;
    if (grid.dim == 1) {
      in_band = std::fabs(coords[i]) >= guard;
    } else {
      in_band = std::fabs(coords[static_cast<std::size_t>(static_cast<int>(i) / n)]) >= guard ||
                std::fabs(coords[static_cast<std::size_t>(static_cast<int>(i) % n)]) >= guard;
    }
    if (in_band) band += mag;
  }
  return (total > 0.0) ? band / total : 0.0;
}

SupDecayCheck sup_norm_decay_check(const SpectralField& f, double t) {
  require_physical(f, "sup_norm_decay_check");
  if (!(t > 0.0)) throw std::domain_error("sup_norm_decay_check: t must be positive");
  SupDecayCheck check;
  check.validity_t_max = schrodinger_validity_tmax(f);
  check.within_validity = t <= check.validity_t_max;
  SpectralField u = schrodinger_propagate(f, t);
  check.lhs = field_lp_norm(u, Exponent::inf());
  const int n = f.grid().dim;
  check.rhs = std::pow(4.0 * std::numbers::pi * std::fabs(t), -0.5 * n) *
              field_lp_norm(f, Exponent(1));
  check.pass = check.lhs <= check.rhs * (1.0 + kDecayCheckSlack);
  return check;
}

DispersiveCheck dispersive_estimate_check(const SpectralField& f, double t, const Exponent& p) {
  require_physical(f, "dispersive_estimate_check");
  if (!p.is_inf() && p.value() < 2.0) {
    throw std::domain_error("dispersive_estimate_check: p must be >= 2 (outside the interpolation segment)");
  }
  if (t == 0.0) throw std::domain_error("dispersive_estimate_check: t must be nonzero");
  DispersiveCheck check;
  check.within_validity = std::fabs(t) <= schrodinger_validity_tmax(f);
  const int n = f.grid().dim;
  const double inv_p = p.is_inf() ? 0.0 : 1.0 / p.value();
  const double decay = n * (0.5 - inv_p);
  check.constant_used = std::pow(4.0 * std::numbers::pi, -decay);
  SpectralField u = schrodinger_propagate(f, t);
  check.lhs = field_lp_norm(u, p);
  check.rhs = check.constant_used * std::pow(std::fabs(t), -decay) *
              field_lp_norm(f, conjugate_exponent(p));
  check.pass = check.lhs <= check.rhs * (1.0 + kDecayCheckSlack);
  return check;
}

DecayFit fit_decay_exponent(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 5) throw std::domain_error("fit_decay_exponent: need at least 5 samples");
  double prev_t = 0.0;
  for (const auto& [t, v] : samples) {
    if (!(t > prev_t)) throw std::domain_error("fit_decay_exponent: t values must be increasing and positive");
    if (!(v > 0.0)) throw std::domain_error("fit_decay_exponent: values must be positive");
    prev_t = t;
  }
  const auto n = static_cast<double>(samples.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [t, v] : samples) {
    double x = std::log(t), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  DecayFit fit;
  const double denom = n * sxx - sx * sx;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.exponent * sx) / n;
  double ss_res = 0.0, ss_tot = 0.0;
  const double mean_y = sy / n;
  for (const auto& [t, v] : samples) {
    double y = std::log(v);
    double pred = fit.intercept + fit.exponent * std::log(t);
    ss_res += (y - pred) * (y - pred);
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  // A constant sample set (ss_tot = 0) is a perfect fit of slope 0.
  fit.r_squared = (ss_tot > 1e-24) ? 1.0 - ss_res / ss_tot : (ss_res <= 1e-18 ? 1.0 : 0.0);
  fit.t_min = samples.front().first;
  fit.t_max = samples.back().first;
  return fit;
}

double mixed_spacetime_norm(std::span<const std::pair<double, SpectralField>> snapshots,
                            const Exponent& q_time, const Exponent& r_space) {
  if (snapshots.empty()) throw std::invalid_argument("mixed_spacetime_norm: no snapshots");
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    if (!(snapshots[i].first > snapshots[i - 1].first)) {
      throw std::invalid_argument("mixed_spacetime_norm: snapshot times must be increasing");
    }
    if (!(snapshots[i].second.grid() == snapshots[0].second.grid())) {
      throw std::invalid_argument("mixed_spacetime_norm: snapshots must share one grid");
    }
  }
  if (q_time.is_inf()) {
    double best = 0.0;
    for (const auto& [t, u] : snapshots) best = std::max(best, field_lp_norm(u, r_space));
    return best;
  }
  if (snapshots.size() < 2) {
    throw std::domain_error("mixed_spacetime_norm: finite time exponent needs >= 2 snapshots");
  }
  const double q = q_time.value();
  std::vector<double> phi(snapshots.size());
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    phi[i] = std::pow(field_lp_norm(snapshots[i].second, r_space), q);
  }
  double integral = 0.0;
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    integral += 0.5 * (phi[i] + phi[i - 1]) * (snapshots[i].first - snapshots[i - 1].first);
  }
  return std::pow(integral, 1.0 / q);
}

namespace {

GridSpec grid_from_uniform(const SampledFunction& f, const char* who) {
  if (!f.uniform()) throw std::invalid_argument(std::string(who) + ": data must live on a uniform grid");
  auto n = static_cast<int>(f.size());
  double h = f.measures()[0];
  return GridSpec(1, 0.5 * h * static_cast<double>(n), n);
}

}  // namespace

WeakSmoothingRow weak_space_smoothing_check(const SampledFunction& f_singular, double t, double q,
                                            double p) {
  if (!(q >= 1.0)) throw std::domain_error("weak_space_smoothing_check: q must be >= 1");
  if (!(p >= q)) throw std::domain_error("weak_space_smoothing_check: requires p >= q");
  if (!(t > 0.0)) throw std::domain_error("weak_space_smoothing_check: t must be positive");
  GridSpec grid = grid_from_uniform(f_singular, "weak_space_smoothing_check");
  SpectralField f = SpectralField::from_real(grid, f_singular.values());
  SpectralField u = heat_propagate(f, t);
  WeakSmoothingRow row;
  row.weak_in = weak_norm(f_singular, q);
  row.strong_in = lebesgue_norm(f_singular, Exponent(q));
  row.weak_out = weak_norm(to_sampled_function(u), p);
  row.ratio_out = (row.weak_in > 0.0) ? row.weak_out / row.weak_in : 0.0;
  return row;
}

SampledFunction truncated_power_data(const GridSpec& grid, double q, double eps) {
  if (grid.dim != 1) throw std::invalid_argument("truncated_power_data: 1-D grids only");
  if (!(q >= 1.0)) throw std::domain_error("truncated_power_data: q must be >= 1");
  if (!(eps > 0.0)) throw std::domain_error("truncated_power_data: eps must be positive");
  auto coords = grid.axis_coords();
  std::vector<double> values(coords.size(), 0.0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    double ax = std::fabs(coords[i]);
    if (ax > eps) values[i] = std::pow(ax, -1.0 / q);
  }
  std::vector<double> measures(coords.size(), grid.cell_measure());
  return SampledFunction(std::move(values), std::move(measures), "truncated_power");
}

std::vector<WeakSmoothingRow> weak_smoothing_sweep(const GridSpec& grid, double t, double q,
                                                   double p, std::span<const double> eps_list) {
  std::vector<WeakSmoothingRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) {
    WeakSmoothingRow row = weak_space_smoothing_check(truncated_power_data(grid, q, eps), t, q, p);
    row.eps = eps;
    rows.push_back(row);
  }
  return rows;
}

SpectralField make_bump_field(const GridSpec& grid, double center, double width,
                              bool l1_normalize) {
  if (!(width > 0.0)) throw std::domain_error("make_bump_field: width must be positive");
  auto coords = grid.axis_coords();
  const int n = grid.n_per_axis;
  std::vector<std::complex<double>> data(grid.total_points(), 0.0);
  auto bump = [&](double r) {
    double u = r / (0.5 * width);
    return (std::fabs(u) < 1.0) ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
  };
  double mass = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double r;
    if (grid.dim == 1) {
      r = coords[i] - center;
    } else {
      double dx = coords[static_cast<std::size_t>(static_cast<int>(i) / n)] - center;
      double dy = coords[static_cast<std::size_t>(static_cast<int>(i) % n)] - center;
      r = std::hypot(dx, dy);
    }
    data[i] = bump(r);
    mass += data[i].real();
  }
  mass *= grid.cell_measure();
  if (l1_normalize && mass > 0.0) {
    for (auto& z : data) z /= mass;
  }
  return SpectralField(grid, std::move(data), Representation::Physical);
}

SpectralField make_gaussian_field(const GridSpec& grid, double sigma, double amplitude) {
  if (!(sigma > 0.0)) throw std::domain_error("make_gaussian_field: sigma must be positive");
  auto coords = grid.axis_coords();
  const int n = grid.n_per_axis;
  std::vector<std::complex<double>> data(grid.total_points(), 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    double r2;
    if (grid.dim == 1) {
      r2 = coords[i] * coords[i];
    } else {
      double dx = coords[static_cast<std::size_t>(static_cast<int>(i) / n)];
      double dy = coords[static_cast<std::size_t>(static_cast<int>(i) % n)];
      r2 = dx * dx + dy * dy;
    }
    data[i] = amplitude * std::exp(-r2 / (2.0 * sigma * sigma));
  }
  return SpectralField(grid, std::move(data), Representation::Physical);
}

OperatorHandle make_heat_operator_handle(const GridSpec& grid, double t) {
  if (!(t > 0.0)) throw std::domain_error("make_heat_operator_handle: t must be positive");
  OperatorHandle h;
  h.name = "heat_t=" + std::to_string(t);
  h.apply = [grid, t](const SampledFunction& f) {
    if (f.size() != grid.total_points() || f.measures()[0] != grid.cell_measure()) {
      throw std::invalid_argument("heat operator: input does not live on the operator grid");
    }
    SpectralField field = SpectralField::from_real(grid, f.values());
    return to_sampled_function(heat_propagate(field, t), FieldPart::Real);
  };
  std::vector<double> measures(grid.total_points(), grid.cell_measure());
  h.random_input = [measures](std::uint64_t s) {
    return random_values_on_measures(s, measures);
  };
  std::vector<double> delta(grid.total_points(), 0.0);
  delta[0] = 1.0 / grid.cell_measure();
  h.structured_candidates.push_back(SampledFunction(delta, measures, "point_mass"));
  h.structured_candidates.push_back(
      SampledFunction(std::vector<double>(grid.total_points(), 1.0), measures, "ones"));
  h.structured_candidates.push_back(
      to_sampled_function(make_bump_field(grid, 0.0, grid.half_length / 8.0)));
  return h;
}

std::pair<EndpointBound, EndpointBound> heat_endpoint_bounds(const GridSpec& grid, double t) {
  std::vector<std::complex<double>> delta(grid.total_points(), 0.0);
  delta[0] = 1.0 / grid.cell_measure();
  SpectralField kernel =
      heat_propagate(SpectralField(grid, std::move(delta), Representation::Physical), t);
  double mass = 0.0, peak = 0.0;
  for (const auto& z : kernel.data()) {
    double mag = std::abs(z);
    mass += mag;
    peak = std::max(peak, mag);
  }
  mass *= grid.cell_measure();
  return {EndpointBound::analytic(Exponent(1), Exponent(1), mass, "discrete kernel L1 mass"),
          EndpointBound::analytic(Exponent(1), Exponent::inf(), peak, "discrete kernel sup")};
}

}  // namespace lpq
