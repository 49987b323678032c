#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdcalc {

// Coefficients grow under repeated twisting and lattice reduction, so every
// count that can come out of a curve computation is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& x) { return x.str(); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign(const Int& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

/// Returns the value as int64 when it fits.
inline std::optional<std::int64_t> to_int64(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) return std::nullopt;
  return x.convert_to<std::int64_t>();
}

}  // namespace sdcalc
