#include "lpq/exponent.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lpq {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("rational_from_double: value is not finite");
  }
  if (x == 0.0) return Rational(0);

  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 bits of mantissa -> integer.
  auto num = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;

  using Int = boost::multiprecision::int128_t;
  Rational r{Int(num)};
  if (exp > 0) {
    r *= Rational(Int(1) << exp);
  } else if (exp < 0) {
    if (exp < -126) {
      // Exponents this small never arise for values >= 1; reject rather
      // than overflow the 128-bit denominator.
      throw std::domain_error("rational_from_double: value too small to represent");
    }
    r /= Rational(Int(1) << -exp);
  }
  return r;
}

double rational_to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Exponent::Exponent(const Rational& p) : value_(p) {
  if (p < Rational(1)) {
    throw std::domain_error("Exponent: p must satisfy 1 <= p <= inf");
  }
}

Exponent Exponent::from_reciprocal(const Rational& r) {
  if (r < Rational(0) || r > Rational(1)) {
    throw std::domain_error("Exponent::from_reciprocal: 1/p must lie in [0,1]");
  }
  if (r == Rational(0)) return inf();
  return Exponent(Rational(1) / r);
}

double Exponent::value() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return rational_to_double(value_);
}

const Rational& Exponent::as_rational() const {
  if (infinite_) throw std::logic_error("Exponent: infinite exponent has no rational value");
  return value_;
}

Rational Exponent::reciprocal() const {
  if (infinite_) return Rational(0);
  return Rational(1) / value_;
}

std::string Exponent::str() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << value_.numerator();
  if (value_.denominator() != 1) os << "/" << value_.denominator();
  return os.str();
}

Exponent conjugate_exponent(const Exponent& p) {
  if (p.is_inf()) return Exponent(1);
  if (p.is_one()) return Exponent::inf();
  const Rational& v = p.as_rational();
  return Exponent(v / (v - Rational(1)));
}

}  // namespace lpq
