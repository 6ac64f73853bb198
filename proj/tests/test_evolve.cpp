#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "lpq/evolve.hpp"
#include "lpq/measure.hpp"

using namespace lpq;

namespace {

SpectralField random_field(const GridSpec& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::complex<double>> data(grid.total_points());
  for (auto& z : data) z = {g(rng), g(rng)};
  return SpectralField(grid, std::move(data), Representation::Physical);
}

}  // namespace

TEST_CASE("GridSpec validation") {
  CHECK_THROWS_AS(GridSpec(3, 1.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(1, -1.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(1, 1.0, 48), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(1, 1.0, 8), std::invalid_argument);
  GridSpec g(2, 2.0, 16);
  CHECK(g.total_points() == 256);
  CHECK(g.cell_measure() == doctest::Approx(0.0625));
}

TEST_CASE("heat_kernel_value: normalization and direct substitution") {
  double x0[] = {0.0};
  CHECK(heat_kernel_value(1.0 / (4.0 * std::numbers::pi), 1, x0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  double x2[] = {2.0};
  CHECK(heat_kernel_value(1.0, 1, x2) ==
        doctest::Approx(std::pow(4.0 * std::numbers::pi, -0.5) * std::exp(-1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(heat_kernel_value(0.0, 1, x0), std::domain_error);
  // unit mass under quadrature, n = 1 and n = 2
  for (int n : {1, 2}) {
    const int cells = 400;
    const double R = 30.0, h = 2 * R / cells;
    double mass = 0.0;
    if (n == 1) {
      for (int i = 0; i < cells; ++i) {
        double x[] = {-R + (i + 0.5) * h};
        mass += heat_kernel_value(2.0, 1, x) * h;
      }
    } else {
      for (int i = 0; i < cells; ++i) {
        for (int j = 0; j < cells; ++j) {
          double x[] = {-R + (i + 0.5) * h, -R + (j + 0.5) * h};
          mass += heat_kernel_value(2.0, 2, x) * h * h;
        }
      }
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("heat_kernel_norm: closed form vs quadrature, scaling slope") {
  CHECK(heat_kernel_norm(0.7, Exponent(1), 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(heat_kernel_norm(0.7, Exponent(1), 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(heat_kernel_norm(1.0, Exponent(2), 1) ==
        doctest::Approx(std::pow(8.0 * std::numbers::pi, -0.25)).epsilon(1e-14));
  CHECK(heat_kernel_norm(2.0, Exponent::inf(), 1) ==
        doctest::Approx(std::pow(8.0 * std::numbers::pi, -0.5)).epsilon(1e-14));

  // quadrature oracle for C_r at t = 1, n = 1
  for (double r : {1.5, 2.0, 4.0}) {
    const int cells = 200000;
    const double R = 40.0, h = 2 * R / cells;
    double acc = 0.0;
    for (int i = 0; i < cells; ++i) {
      double x[] = {-R + (i + 0.5) * h};
      acc += std::pow(heat_kernel_value(1.0, 1, x), r) * h;
    }
    CHECK(heat_kernel_norm(1.0, Exponent(r), 1) ==
          doctest::Approx(std::pow(acc, 1.0 / r)).epsilon(1e-6));
  }

  // log-log slope equals -(n/2)(1 - 1/r) to 1e-9
  for (int n : {1, 2}) {
    for (double r : {1.0, 2.0, 4.0}) {
      std::vector<std::pair<double, double>> samples;
      for (double t : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        samples.emplace_back(t, heat_kernel_norm(t, Exponent(r), n));
      }
      auto fit = fit_decay_exponent(samples);
      CHECK(fit.exponent == doctest::Approx(-0.5 * n * (1.0 - 1.0 / r)).epsilon(1e-9));
    }
  }
}

TEST_CASE("spectral round trip and representation guards") {
  GridSpec g(1, 8.0, 128);
  auto f = random_field(g, 3);
  auto back = f.to_frequency().to_physical();
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < f.data().size(); ++i) {
    err = std::max(err, std::abs(back.data()[i] - f.data()[i]));
    scale = std::max(scale, std::abs(f.data()[i]));
  }
  CHECK(err <= 1e-12 * scale);
  CHECK_THROWS_AS(heat_propagate(f.to_frequency(), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(heat_propagate(f, -1.0), std::domain_error);

  GridSpec g2(2, 4.0, 32);
  auto f2 = random_field(g2, 4);
  auto back2 = f2.to_frequency().to_physical();
  for (std::size_t i = 0; i < f2.data().size(); i += 37) {
    CHECK(std::abs(back2.data()[i] - f2.data()[i]) < 1e-12);
  }
}

TEST_CASE("heat_propagate: identity at t=0, gaussian-to-gaussian oracle") {
  GridSpec g(1, 16.0, 1024);
  auto gauss = make_gaussian_field(g, 0.5);
  auto same = heat_propagate(gauss, 0.0);
  CHECK(same.data()[11] == gauss.data()[11]);

  auto coords = g.axis_coords();
  for (double t : {0.5, 1.0, 2.0}) {
    auto u = heat_propagate(gauss, t);
    double s2 = 0.25 + 2.0 * t;
    double max_err = 0.0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      double exact = 0.5 / std::sqrt(s2) * std::exp(-coords[i] * coords[i] / (2.0 * s2));
      max_err = std::max(max_err, std::abs(u.data()[i] - exact));
    }
    CHECK(max_err <= 1e-8);
  }
}

TEST_CASE("heat_propagate: 2-D gaussian oracle") {
  GridSpec g(2, 8.0, 128);
  auto gauss = make_gaussian_field(g, 0.5);
  auto u = heat_propagate(gauss, 0.5);
  auto coords = g.axis_coords();
  double s2 = 0.25 + 1.0;
  double max_err = 0.0;
  for (int i = 0; i < g.n_per_axis; i += 7) {
    for (int j = 0; j < g.n_per_axis; j += 7) {
      double r2 = coords[i] * coords[i] + coords[j] * coords[j];
      double exact = (0.25 / s2) * std::exp(-r2 / (2.0 * s2));
      max_err = std::max(max_err, std::abs(u.data()[static_cast<std::size_t>(i) * 128 + j] - exact));
    }
  }
  CHECK(max_err <= 1e-8);
}

TEST_CASE("heat semigroup law, positivity, mass conservation, sup monotonicity") {
  GridSpec g(1, 8.0, 256);
  auto f = make_bump_field(g, 0.5, 1.0);
  auto a = heat_propagate(heat_propagate(f, 0.3), 0.7);
  auto b = heat_propagate(f, 1.0);
  double diff = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) diff += std::norm(a.data()[i] - b.data()[i]);
  diff = std::sqrt(diff * g.cell_measure());
  CHECK(diff <= 1e-10 * field_lp_norm(f, Exponent(2)));

  double mass0 = field_integral(f).real();
  double prev_sup = field_lp_norm(f, Exponent::inf());
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    auto u = heat_propagate(f, t);
    for (const auto& z : u.data()) CHECK(z.real() >= -1e-10);
    CHECK(field_integral(u).real() == doctest::Approx(mass0).epsilon(1e-10));
    double sup = field_lp_norm(u, Exponent::inf());
    CHECK(sup <= prev_sup * (1 + 1e-12));
    prev_sup = sup;
  }
}

TEST_CASE("schrodinger_propagate: unitarity, group law, gaussian modulus oracle") {
  GridSpec g(1, 16.0, 1024);
  auto f = random_field(g, 11);
  auto same = schrodinger_propagate(f, 0.0);
  CHECK(same.data()[7] == f.data()[7]);
  double n2 = field_lp_norm(f, Exponent(2));
  auto u = schrodinger_propagate(f, 1.37);
  CHECK(field_lp_norm(u, Exponent(2)) == doctest::Approx(n2).epsilon(1e-12));
  // U_{-t} inverts U_t
  auto back = schrodinger_propagate(u, -1.37);
  double err = 0.0;
  for (std::size_t i = 0; i < f.data().size(); ++i) {
    err = std::max(err, std::abs(back.data()[i] - f.data()[i]));
  }
  CHECK(err <= 1e-12 * field_lp_norm(f, Exponent::inf()));
  // group law
  auto two_step = schrodinger_propagate(schrodinger_propagate(f, 0.4), 0.6);
  auto one_step = schrodinger_propagate(f, 1.0);
  err = 0.0;
  for (std::size_t i = 0; i < f.data().size(); ++i) {
    err = std::max(err, std::abs(two_step.data()[i] - one_step.data()[i]));
  }
  CHECK(err <= 1e-11 * field_lp_norm(f, Exponent::inf()));

  // |u(x,t)| for gaussian data matches the complex-variance closed form
  auto gauss = make_gaussian_field(g, 0.5);
  for (double t : {0.25, 0.5}) {
    auto ug = schrodinger_propagate(gauss, t);
    auto coords = g.axis_coords();
    double s2 = 0.25, denom2 = s2 * s2 + 4.0 * t * t;
    double max_err = 0.0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      double amp = 0.5 / std::pow(denom2, 0.25);
      double exact = amp * std::exp(-coords[i] * coords[i] * s2 / (2.0 * denom2));
      max_err = std::max(max_err, std::fabs(std::abs(ug.data()[i]) - exact));
    }
    CHECK(max_err <= 1e-8);
  }
}

TEST_CASE("sup_norm_decay_check: bump data passes, zero data is vacuous") {
  GridSpec g(1, 256.0, 32768);
  auto f = make_bump_field(g, 0.0, 1.0);
  double prev_ratio = 0.0;
  for (double t : {0.25, 0.5, 0.9}) {
    auto check = sup_norm_decay_check(f, t);
    CHECK(check.pass);
    CHECK(check.within_validity);
    CHECK(check.lhs / check.rhs > prev_ratio);  // ratio climbs toward 1 with t
    prev_ratio = check.lhs / check.rhs;
  }
  // sharper data gets closer to the bound at fixed t
  double prev = 0.0;
  for (double width : {4.0, 2.0, 1.0}) {
    auto check = sup_norm_decay_check(make_bump_field(g, 0.0, width), 0.9);
    CHECK(check.pass);
    CHECK(check.lhs / check.rhs > prev);
    prev = check.lhs / check.rhs;
  }
  CHECK(prev > 0.999);

  SpectralField zero(g, std::vector<std::complex<double>>(g.total_points(), 0.0));
  auto z = sup_norm_decay_check(zero, 1.0);
  CHECK(z.lhs == 0.0);
  CHECK(z.rhs == 0.0);
  CHECK(z.pass);
  // far outside the window the result is flagged
  auto flagged = sup_norm_decay_check(f, 1e5);
  CHECK_FALSE(flagged.within_validity);
  CHECK_THROWS_AS(sup_norm_decay_check(f, 0.0), std::domain_error);
}

TEST_CASE("dispersive_estimate_check: endpoint reductions and interior p") {
  GridSpec g(1, 256.0, 32768);
  auto f = make_bump_field(g, 0.0, 1.0);
  // p = 2 reduces to conservation with constant 1
  auto c2 = dispersive_estimate_check(f, 0.7, Exponent(2));
  CHECK(c2.constant_used == doctest::Approx(1.0));
  CHECK(c2.lhs == doctest::Approx(c2.rhs).epsilon(1e-12));
  CHECK(c2.pass);
  // p = inf agrees with sup_norm_decay_check
  auto cinf = dispersive_estimate_check(f, 0.7, Exponent::inf());
  auto sup = sup_norm_decay_check(f, 0.7);
  CHECK(cinf.lhs == doctest::Approx(sup.lhs).epsilon(1e-13));
  CHECK(cinf.rhs == doctest::Approx(sup.rhs).epsilon(1e-13));
  for (double p : {4.0, 8.0}) {
    auto c = dispersive_estimate_check(f, 0.7, Exponent(p));
    CHECK(c.pass);
  }
  CHECK_THROWS_AS(dispersive_estimate_check(f, 0.7, Exponent(1.5)), std::domain_error);
  CHECK_THROWS_AS(dispersive_estimate_check(f, 0.0, Exponent(4)), std::domain_error);
}

TEST_CASE("fit_decay_exponent: exact power law and input validation") {
  std::vector<std::pair<double, double>> samples;
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) samples.emplace_back(t, 3.0 * std::pow(t, -0.75));
  auto fit = fit_decay_exponent(samples);
  CHECK(fit.exponent == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.t_min == 0.5);
  CHECK(fit.t_max == 16.0);

  std::vector<std::pair<double, double>> too_few = {{1, 1}, {2, 1}, {3, 1}, {4, 1}};
  CHECK_THROWS_AS(fit_decay_exponent(too_few), std::domain_error);
  std::vector<std::pair<double, double>> nonpos = {{1, 1}, {2, 1}, {3, 0.0}, {4, 1}, {5, 1}};
  CHECK_THROWS_AS(fit_decay_exponent(nonpos), std::domain_error);
  std::vector<std::pair<double, double>> unsorted = {{1, 1}, {3, 1}, {2, 1}, {4, 1}, {5, 1}};
  CHECK_THROWS_AS(fit_decay_exponent(unsorted), std::domain_error);
  // constant samples: slope 0, perfect fit
  std::vector<std::pair<double, double>> flat = {{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}};
  auto ffit = fit_decay_exponent(flat);
  CHECK(ffit.exponent == doctest::Approx(0.0));
  CHECK(ffit.r_squared == 1.0);
}

TEST_CASE("mixed_spacetime_norm: trivial cases and refinement stability") {
  GridSpec g(1, 32.0, 4096);
  auto f = make_bump_field(g, 0.0, 1.0);
  std::vector<std::pair<double, SpectralField>> one;
  one.emplace_back(0.5, schrodinger_propagate(f, 0.5));
  CHECK(mixed_spacetime_norm(one, Exponent::inf(), Exponent(4)) ==
        doctest::Approx(field_lp_norm(one[0].second, Exponent(4))));
  CHECK_THROWS_AS(mixed_spacetime_norm(one, Exponent(8), Exponent(4)), std::domain_error);

  // constant-in-time field on [0, T]: T^(1/q) * spatial norm, exact trapezoid
  std::vector<std::pair<double, SpectralField>> constant;
  for (double t : {0.0, 0.5, 1.0, 1.5, 2.0}) constant.emplace_back(t, f);
  double spatial = field_lp_norm(f, Exponent(4));
  CHECK(mixed_spacetime_norm(constant, Exponent(8), Exponent(4)) ==
        doctest::Approx(std::pow(2.0, 1.0 / 8.0) * spatial).epsilon(1e-12));

  // Schrodinger bump evolution, (q,r) = (8,4): stable under time refinement to 1%
  auto value_for = [&](int steps) {
    std::vector<std::pair<double, SpectralField>> snaps;
    for (int i = 0; i <= steps; ++i) {
      double t = 0.1 + (1.0 - 0.1) * i / steps;
      snaps.emplace_back(t, schrodinger_propagate(f, t));
    }
    return mixed_spacetime_norm(snaps, Exponent(8), Exponent(4));
  };
  double coarse = value_for(16);
  double fine = value_for(32);
  CHECK(std::isfinite(coarse));
  CHECK(std::fabs(fine - coarse) <= 0.01 * fine);
}

TEST_CASE("weak_space_smoothing_check: smooth data, sweep boundedness, t-monotonicity") {
  GridSpec g(1, 0.5, 1 << 15);
  // smooth data: trivially bounded ratio
  auto smooth = to_sampled_function(make_bump_field(g, 0.0, 0.25));
  auto row = weak_space_smoothing_check(smooth, 0.01, 2.0, 4.0);
  CHECK(std::isfinite(row.ratio_out));
  CHECK(row.ratio_out > 0.0);

  double epss[] = {1e-1, 1e-2, 1e-3};
  auto rows = weak_smoothing_sweep(g, 0.02, 2.0, 4.0, epss);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].strong_in > rows[i - 1].strong_in);      // strong norm diverges
    CHECK(rows[i].ratio_out < rows[0].ratio_out * 1.25);   // output ratio stays bounded
    CHECK(rows[i].weak_in < rows[0].weak_in * 1.6);        // weak norm stays bounded
  }

  // t doubling: output weak norm non-increasing
  auto data = truncated_power_data(g, 2.0, 1e-3);
  double prev = std::numeric_limits<double>::infinity();
  for (double t : {0.005, 0.01, 0.02, 0.04}) {
    auto r = weak_space_smoothing_check(data, t, 2.0, 4.0);
    CHECK(r.weak_out <= prev * (1 + 1e-12));
    prev = r.weak_out;
  }
  CHECK_THROWS_AS(weak_space_smoothing_check(data, 0.01, 2.0, 1.5), std::domain_error);
}

TEST_CASE("boundary guard band: heat stays faithful inside the box") {
  GridSpec g(1, 16.0, 1024);
  auto f = make_bump_field(g, 0.0, 0.5);
  auto u = heat_propagate(f, 2.0);
  CHECK(boundary_mass_fraction(u) < 1e-8);
  // very long times equilibrate and the guard fills up
  auto late = heat_propagate(f, 1e4);
  CHECK(boundary_mass_fraction(late) > 1e-3);
}
