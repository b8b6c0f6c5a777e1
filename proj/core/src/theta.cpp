#include "exlab/theta.hpp"

#include <algorithm>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "exlab/error.hpp"

namespace exlab {

namespace {

void check_odd_cycle(int n) {
  if (n < 3 || n % 2 == 0) throw Error("theta_odd_cycle needs odd n >= 3, got " + std::to_string(n));
}

// a + b*sqrt(d) over the rationals, for a fixed square-free d.
struct QuadraticSurd {
  Rational a;
  Rational b;
  Rational d;

  QuadraticSurd operator+(const QuadraticSurd& o) const { return {a + o.a, b + o.b, d}; }
  QuadraticSurd operator*(const QuadraticSurd& o) const {
    return {a * o.a + b * o.b * d, a * o.b + b * o.a, d};
  }
  QuadraticSurd conjugate() const { return {a, -b, d}; }
  Rational norm() const { return a * a - b * b * d; }
  QuadraticSurd operator/(const QuadraticSurd& o) const {
    const QuadraticSurd num = *this * o.conjugate();
    const Rational den = o.norm();
    return {num.a / den, num.b / den, d};
  }
};

// cos(pi/n) in closed form where it lies in a quadratic field.
std::optional<QuadraticSurd> exact_cos_pi_over(int n) {
  if (n == 3) return QuadraticSurd{Rational(1, 2), Rational(0), Rational(5)};
  if (n == 5) return QuadraticSurd{Rational(1, 4), Rational(1, 4), Rational(5)};
  return std::nullopt;
}

}  // namespace

HighPrecision theta_odd_cycle(int n) {
  check_odd_cycle(n);
  const HighPrecision c = boost::multiprecision::cos(boost::math::constants::pi<HighPrecision>() / n);
  return HighPrecision(n) * c / (1 + c);
}

std::string format_decimal(const HighPrecision& value, unsigned digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(std::min(digits, kMaxThetaDigits));
  out << value;
  return out.str();
}

std::optional<RootValue> theta_odd_cycle_exact(int n) {
  check_odd_cycle(n);
  const auto c = exact_cos_pi_over(n);
  if (!c) return std::nullopt;
  const QuadraticSurd one{Rational(1), Rational(0), c->d};
  const QuadraticSurd scale{Rational(n), Rational(0), c->d};
  const QuadraticSurd theta = (scale * *c) / (one + *c);
  if (theta.b.is_zero()) {
    if (theta.a.sign() < 0) return std::nullopt;
    return RootValue(theta.a);
  }
  // b*sqrt(d) = sqrt(b^2 d) when there is no rational part.
  if (theta.a.is_zero() && theta.b.sign() > 0) return RootValue(theta.b * theta.b * theta.d, 2);
  return std::nullopt;
}

bool theta_equals(int n, const RootValue& value) {
  const auto exact = theta_odd_cycle_exact(n);
  return exact && *exact == value;
}

}  // namespace exlab
