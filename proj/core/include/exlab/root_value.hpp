#pragma once

#include <compare>
#include <optional>
#include <string>

#include "exlab/rational.hpp"

namespace exlab {

/// base^(1/root) for a non-negative rational base. Comparisons are exact
/// and done on integer powers, never on decimal approximations.
class RootValue {
 public:
  RootValue() = default;
  RootValue(Rational base, unsigned root);
  explicit RootValue(Rational value) : RootValue(std::move(value), 1) {}

  const Rational& base() const { return base_; }
  unsigned root() const { return root_; }

  /// The value as a rational, when base is a perfect root-th power.
  std::optional<Rational> as_rational() const;

  /// "p/q" for root 1, otherwise "k-th root of p/q".
  std::string to_string() const;
  double approximate() const;

  friend std::strong_ordering operator<=>(const RootValue& lhs, const RootValue& rhs);
  friend bool operator==(const RootValue& lhs, const RootValue& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const RootValue& lhs, const Rational& rhs);
  friend bool operator==(const RootValue& lhs, const Rational& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

 private:
  Rational base_;
  unsigned root_ = 1;
};

}  // namespace exlab
