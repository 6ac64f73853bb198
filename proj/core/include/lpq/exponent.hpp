#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace lpq {

/// Exact rational arithmetic for exponent algebra. int128 limbs keep every
/// dyadic double and its Holder conjugate exactly representable.
using Rational = boost::rational<boost::multiprecision::int128_t>;

/// Exact conversion of a finite double to a rational (every double is dyadic).
/// Throws std::domain_error for NaN or infinity.
Rational rational_from_double(double x);

double rational_to_double(const Rational& r);

/// An extended-real Lebesgue exponent p in [1, inf]. Infinity is an explicit
/// state, never a sentinel float, and finite values are exact rationals so
/// that conjugation and convex combinations of reciprocals are exact.
class Exponent {
 public:
  Exponent(int p) : Exponent(Rational(p)) {}                // NOLINT(runtime/explicit)
  Exponent(double p) : Exponent(rational_from_double(p)) {} // NOLINT(runtime/explicit)
  explicit Exponent(const Rational& p);

  static Exponent inf() {
    Exponent e;
    e.infinite_ = true;
    return e;
  }

  /// Builds the exponent whose reciprocal is r; r = 0 yields infinity.
  /// Requires 0 <= r <= 1.
  static Exponent from_reciprocal(const Rational& r);

  bool is_inf() const { return infinite_; }
  bool is_one() const { return !infinite_ && value_ == Rational(1); }

  /// Numeric value; +infinity when is_inf().
  double value() const;

  /// Exact rational value. Throws std::logic_error when infinite.
  const Rational& as_rational() const;

  /// 1/p as an exact rational; 0 when p = inf.
  Rational reciprocal() const;

  /// "2", "7/3" or "inf"; used in output headers.
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

 private:
  Exponent() = default;
  Rational value_{1};
  bool infinite_ = false;
};

/// Holder conjugate: 1/p + 1/q = 1, with 1 <-> inf. Exact involution.
Exponent conjugate_exponent(const Exponent& p);

}  // namespace lpq
