#include "exlab/root_value.hpp"

#include <cmath>

#include "exlab/error.hpp"

namespace exlab {

RootValue::RootValue(Rational base, unsigned root) : base_(std::move(base)), root_(root) {
  if (root_ == 0) throw Error("root index must be at least 1");
  if (base_.sign() < 0) throw Error("root of a negative base");
}

std::optional<Rational> RootValue::as_rational() const {
  mpz_class num;
  mpz_class den;
  if (mpz_root(num.get_mpz_t(), base_.get().get_num_mpz_t(), root_) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), base_.get().get_den_mpz_t(), root_) == 0) return std::nullopt;
  return Rational(mpq_class(num, den));
}

std::string RootValue::to_string() const {
  if (root_ == 1) return base_.to_string();
  return std::to_string(root_) + "-th root of " + base_.to_string();
}

double RootValue::approximate() const { return std::pow(base_.to_double(), 1.0 / root_); }

// a^(1/p) vs b^(1/q)  <=>  a^q vs b^p, both sides non-negative.
std::strong_ordering operator<=>(const RootValue& lhs, const RootValue& rhs) {
  return lhs.base_.pow(rhs.root_) <=> rhs.base_.pow(lhs.root_);
}

std::strong_ordering operator<=>(const RootValue& lhs, const Rational& rhs) {
  if (rhs.sign() < 0) return std::strong_ordering::greater;
  return lhs.base_ <=> rhs.pow(lhs.root_);
}

}  // namespace exlab
