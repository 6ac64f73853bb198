#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "lpq/exponent.hpp"
#include "lpq/interpolate.hpp"
#include "lpq/operators.hpp"
#include "lpq/sampled_function.hpp"

namespace lpq {

/// Periodic grid over the box [-L, L)^n, n in {1, 2}, N points per axis
/// (a power of two, N >= 16), spacing h = 2L/N. Frequencies are
/// xi = pi * k / L for centered integer k, so the Fourier multipliers match
/// the continuum symbols exp(-|xi|^2 t) and exp(-i |xi|^2 t) with no hidden
/// scaling.
struct GridSpec {
  GridSpec(int dimension, double box_half_length, int points_per_axis);

  int dim;
  double half_length;
  int n_per_axis;

  double spacing() const { return 2.0 * half_length / static_cast<double>(n_per_axis); }
  std::size_t total_points() const;
  double cell_measure() const;  // h^n
  /// x_j = -L + j h along one axis.
  std::vector<double> axis_coords() const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.dim == b.dim && a.half_length == b.half_length && a.n_per_axis == b.n_per_axis;
  }
};

enum class Representation { Physical, Frequency };

/// Complex grid data in physical or frequency representation; the carrier of
/// u(x, t). Row-major layout for n = 2.
class SpectralField {
 public:
  SpectralField(GridSpec grid, std::vector<std::complex<double>> data,
                Representation rep = Representation::Physical);

  static SpectralField from_real(const GridSpec& grid, std::span<const double> samples);

  const GridSpec& grid() const { return grid_; }
  Representation representation() const { return rep_; }
  std::span<const std::complex<double>> data() const { return data_; }

  SpectralField to_frequency() const;
  SpectralField to_physical() const;

  /// |xi|^2 for the mode at flat index i (frequency representation order).
  double mode_xi_squared(std::size_t i) const;

 private:
  GridSpec grid_;
  std::vector<std::complex<double>> data_;
  Representation rep_;
};

/// Pointwise Gaussian heat kernel K_t(x) = (4 pi t)^(-n/2) exp(-|x|^2 / 4t).
double heat_kernel_value(double t, int n, std::span<const double> x);

/// ||K_t||_r = C_r t^(-(n/2)(1 - 1/r)) with C_r = (4 pi)^(-(n/2)(1-1/r)) r^(-n/(2r)),
/// from the Gaussian r-th power integral; r = 1 gives 1 (unit mass), r = inf
/// gives the peak height (4 pi t)^(-n/2).
double heat_kernel_norm(double t, const Exponent& r, int n);

/// Spectral heat semigroup: multiplier exp(-|xi|^2 t) per mode. t = 0 is the
/// identity (returned exactly); t < 0 is a domain error. Input physical.
SpectralField heat_propagate(const SpectralField& f, double t);

/// Unitary Schrodinger group: unimodular multiplier exp(-i |xi|^2 t), any
/// real t; U_{-t} inverts U_t. Input physical.
SpectralField schrodinger_propagate(const SpectralField& f, double t);

/// Riemann cell norm (sum |u|^p h^n)^(1/p); max |u| for p = inf.
double field_lp_norm(const SpectralField& u, const Exponent& p);

/// Discrete integral sum u h^n (the conserved mass under heat flow).
std::complex<double> field_integral(const SpectralField& u);

/// Bridge to the measure-space modules: cells of measure h^n carrying
/// magnitude, real or imaginary part.
enum class FieldPart { Magnitude, Real, Imag };
SampledFunction to_sampled_function(const SpectralField& u, FieldPart part = FieldPart::Magnitude);

/// Largest |xi| carrying at least `threshold` times the peak spectral
/// amplitude; the radius in the dispersion validity heuristic.
double frequency_support_radius(const SpectralField& f, double threshold = 1e-3);

/// Pre-wraparound window for free-space claims about schrodinger_propagate:
/// valid while (group-velocity spread) 2 R t stays below half the box,
/// R = frequency_support_radius(f).
double schrodinger_validity_tmax(const SpectralField& f);

/// Fraction of |u| mass inside the guard band (outer eighth of the box per
/// side); below 1e-8 the periodic truncation is faithful to free space.
double boundary_mass_fraction(const SpectralField& u);

struct SupDecayCheck {
  double lhs = 0.0;  // max |u(t)|
  double rhs = 0.0;  // (4 pi |t|)^(-n/2) ||f||_1
  bool pass = false;
  bool within_validity = false;
  double validity_t_max = 0.0;
};

/// ||u(t)||_inf <= (4 pi |t|)^(-n/2) ||f||_1 for the Schrodinger flow;
/// pass iff lhs <= rhs (1 + 1e-6). Outside the validity window the result is
/// flagged, never silently passed.
SupDecayCheck sup_norm_decay_check(const SpectralField& f, double t);

struct DispersiveCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant_used = 0.0;  // (4 pi)^(-n(1/2 - 1/p)), the geometric-mean constant
  bool pass = false;
  bool within_validity = false;
};

/// ||exp(it Lap) f||_p <= C |t|^(-n(1/2 - 1/p)) ||f||_{p'} with C the
/// geometric mean of the endpoint constants (1 at L2->L2 and
/// (4 pi |t|)^(-n/2) at L1->Linf). Requires p >= 2.
DispersiveCheck dispersive_estimate_check(const SpectralField& f, double t, const Exponent& p);

struct DecayFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
};

/// Least-squares line through (ln t, ln value); needs >= 5 samples with
/// increasing t and positive values.
DecayFit fit_decay_exponent(std::span<const std::pair<double, double>> samples);

/// L_{q,t}(L_{r,x}) norm from snapshots: trapezoidal time quadrature of
/// ||u(t)||_r^q (then the q-th root); q = inf takes the sup over snapshots.
double mixed_spacetime_norm(std::span<const std::pair<double, SpectralField>> snapshots,
                            const Exponent& q_time, const Exponent& r_space);

struct WeakSmoothingRow {
  double eps = 0.0;
  double weak_in = 0.0;    // ||f||_{q,inf}
  double strong_in = 0.0;  // ||f||_q
  double weak_out = 0.0;   // ||u(t)||_{p,inf}
  double ratio_out = 0.0;  // weak_out / weak_in
};

/// Evolves singular data under heat flow and reports weak-norm behaviour:
/// the input weak norm stays bounded under truncation refinement while the
/// strong norm diverges, and the output weak-norm ratio stays bounded.
/// f_singular must be a uniform-grid function (cells of equal measure h,
/// box [-L, L) with 2L = N h, N a power of two).
WeakSmoothingRow weak_space_smoothing_check(const SampledFunction& f_singular, double t, double q,
                                            double p);

/// |x|^(-1/q) zeroed on |x| <= eps, sampled on the grid; a member of
/// L_{q,inf} whose L_q norm diverges as eps -> 0.
SampledFunction truncated_power_data(const GridSpec& grid, double q, double eps);

std::vector<WeakSmoothingRow> weak_smoothing_sweep(const GridSpec& grid, double t, double q,
                                                   double p, std::span<const double> eps_list);

// Canonical data.
SpectralField make_bump_field(const GridSpec& grid, double center, double width,
                              bool l1_normalize = true);
SpectralField make_gaussian_field(const GridSpec& grid, double sigma, double amplitude = 1.0);

/// Heat propagator at fixed t as a real operator on uniform-grid sampled
/// functions, with certified discrete endpoint bounds (kernel L1 mass for
/// L1 -> L1, kernel sup for L1 -> Linf) for the interpolation harness.
OperatorHandle make_heat_operator_handle(const GridSpec& grid, double t);
std::pair<EndpointBound, EndpointBound> heat_endpoint_bounds(const GridSpec& grid, double t);

}  // namespace lpq
