#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "exlab/root_value.hpp"

namespace exlab {

/// 150 significant decimal digits.
using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<150>>;

/// Maximum number of digits theta values can be displayed with.
inline constexpr unsigned kMaxThetaDigits = 120;

/// Lovasz number of the n-cycle for odd n >= 3: n cos(pi/n) / (1 + cos(pi/n)).
/// Throws exlab::Error for even n or n < 3.
HighPrecision theta_odd_cycle(int n);

/// Decimal rendering with `digits` digits after the point (clamped to
/// kMaxThetaDigits).
std::string format_decimal(const HighPrecision& value, unsigned digits);

/// Exact value of theta(C_n) as a root, for the cycles where cos(pi/n)
/// is a known quadratic irrational (n = 3 and n = 5); nullopt otherwise.
std::optional<RootValue> theta_odd_cycle_exact(int n);

/// True iff theta(C_n) equals `value` exactly. Only decidable for the
/// cycles covered by theta_odd_cycle_exact; otherwise returns false.
bool theta_equals(int n, const RootValue& value);

}  // namespace exlab
