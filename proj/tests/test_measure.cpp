#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "lpq/measure.hpp"
#include "lpq/operators.hpp"

using namespace lpq;

TEST_CASE("integrate: constant and indicator identities") {
  CHECK(integrate(SampledFunction::constant(1.0, 8, 1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  // indicator of half the cells of a measure-2 grid
  SampledFunction half({1, 1, 0, 0}, {0.5, 0.5, 0.5, 0.5});
  CHECK(integrate(half) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("integrate: gaussian refinement converges to sqrt(pi)") {
  BuiltinSpec g;
  g.family = BuiltinSpec::Family::Gaussian;
  g.domain_lo = -8.0;
  g.domain_hi = 8.0;
  g.cells = 64;
  g.sigma = std::numbers::sqrt2 / 2.0;  // exp(-x^2)
  double prev_err = std::numeric_limits<double>::infinity();
  const double target = std::sqrt(std::numbers::pi);
  for (int level : {1, 2, 4, 8}) {
    double value = integrate(sample_builtin(g, Quadrature::refined(level)));
    double err = std::fabs(value - target);
    CHECK(err < prev_err + 1e-12);
    prev_err = err;
  }
  CHECK(prev_err < 1e-6);
}

TEST_CASE("lebesgue_norm: closed forms") {
  SampledFunction ind = SampledFunction::indicator(1.0);
  for (double p : {1.0, 2.0, 3.5, 17.0}) {
    CHECK(lebesgue_norm(ind, Exponent(p)) == doctest::Approx(1.0).epsilon(1e-15));
  }
  // f(x) = x on [0,1], p = 2 -> 1/sqrt(3) in the refinement limit
  BuiltinSpec lin;
  lin.family = BuiltinSpec::Family::Power;
  lin.exponent = 1.0;
  lin.domain_lo = 0.0;
  lin.domain_hi = 1.0;
  lin.cells = 512;
  double norm = lebesgue_norm(sample_builtin(lin, Quadrature::refined(8)), Exponent(2));
  CHECK(norm == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-6));

  SampledFunction f({3, 1}, {1, 2});
  CHECK(lebesgue_norm(f, Exponent::inf()) == 3.0);
}

TEST_CASE("lebesgue_norm: p < 1 rejected, structural errors rejected") {
  SampledFunction f({1.0}, {1.0});
  CHECK_THROWS_AS(lebesgue_norm(f, Exponent(0.5)), std::domain_error);
  CHECK_THROWS_AS(SampledFunction({1.0, 2.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampledFunction({1.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampledFunction({-1.0}, {1.0}), std::invalid_argument);
  CHECK_NOTHROW(SampledFunction({-1.0}, {1.0}, "", /*allow_signed=*/true));
}

TEST_CASE("integrate is linear on a shared grid") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto f = random_simple_function(mix_seed(11, s));
    auto g = random_values_on_measures(mix_seed(12, s), f.measures());
    double a = 2.5, b = -0.75;
    double lhs = integrate(f.scaled(a) + g.scaled(b));
    double rhs = a * integrate(f) + b * integrate(g);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("lebesgue_norm is monotone under pointwise domination") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto f = random_simple_function(mix_seed(21, s));
    auto g = f + random_values_on_measures(mix_seed(22, s), f.measures());
    for (double p : {1.0, 2.0, 4.0}) {
      CHECK(lebesgue_norm(f, Exponent(p)) <= lebesgue_norm(g, Exponent(p)) * (1 + 1e-14));
    }
    CHECK(lebesgue_norm(f, Exponent::inf()) <= lebesgue_norm(g, Exponent::inf()) * (1 + 1e-14));
  }
}

TEST_CASE("lebesgue_norm approaches the sup norm as p grows") {
  // On a normalized-measure grid the p-norms increase monotonically toward max.
  auto f = SampledFunction({0.2, 0.9, 0.5, 1.7, 0.3}, {0.2, 0.2, 0.2, 0.2, 0.2});
  double prev = 0.0;
  for (double p : {8.0, 16.0, 32.0, 64.0}) {
    double norm = lebesgue_norm(f, Exponent(p));
    CHECK(norm >= prev - 1e-14);
    CHECK(norm <= f.max_abs() + 1e-14);
    prev = norm;
  }
  CHECK(f.max_abs() - prev < 0.05);
}

TEST_CASE("conjugate_exponent: endpoints and involution") {
  CHECK(conjugate_exponent(Exponent(2)) == Exponent(2));
  CHECK(conjugate_exponent(Exponent(1)).is_inf());
  CHECK(conjugate_exponent(Exponent::inf()) == Exponent(1));
  CHECK(conjugate_exponent(Exponent(4)) == Exponent(Rational(4, 3)));
  for (double p : {1.0, 1.1, 4.0 / 3.0, 1.5, 2.0, 7.0 / 3.0, 5.0, 64.0}) {
    Exponent e(p);
    CHECK(conjugate_exponent(conjugate_exponent(e)) == e);
  }
  CHECK(conjugate_exponent(conjugate_exponent(Exponent::inf())).is_inf());
}

TEST_CASE("Exponent: exact rationals and reciprocal round trip") {
  Exponent seven_thirds{Rational(7, 3)};
  CHECK(seven_thirds.str() == "7/3");
  CHECK(Exponent::from_reciprocal(seven_thirds.reciprocal()) == seven_thirds);
  CHECK(Exponent::from_reciprocal(Rational(0)).is_inf());
  CHECK_THROWS_AS(Exponent(0.99), std::domain_error);
}
