#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sdcalc {

/// Summands split off by substitutions.
enum class Summand {
  CP2,           // CP^2
  CP2Bar,        // CP^2 with reversed orientation
  S2xS2,         // S_k, k even
  CP2SumCP2Bar,  // S_k, k odd: CP^2 # CP^2-bar
};

const char* to_string(Summand s);

/// How the last fiber piece of a genus-1 diagram is glued back in: the
/// (0,k)-framed Hopf link summand S_0 = S^2 x S^2 or S_1 = CP^2 # CP^2-bar.
enum class Closure { Spin0, NonSpin1, Unclosed };

const char* to_string(Closure c);

/// S_k # l (S^2 x S^2) # m CP^2 # n CP^2-bar.
struct SumForm {
  std::uint64_t l = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  Closure closure = Closure::Unclosed;

  void add(Summand s);
  /// Adds counts; closure of `other` is ignored.
  SumForm& operator+=(const SumForm& other);

  friend bool operator==(const SumForm&, const SumForm&) = default;
};

SumForm delta_of(Summand s);

/// Normal form of a connected sum: either t (S^2 x S^2) (spin) or
/// m CP^2 # n CP^2-bar, with every count at least 1.
struct CanonicalForm {
  bool spin = false;
  std::uint64_t s2xs2 = 0;
  std::uint64_t cp2 = 0;
  std::uint64_t cp2bar = 0;

  long long signature() const { return static_cast<long long>(cp2) - static_cast<long long>(cp2bar); }
  std::uint64_t b2() const { return spin ? 2 * s2xs2 : cp2 + cp2bar; }
  std::string str() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Uses X # (S^2 x S^2) = X # CP^2 # CP^2-bar for non-spin X (a classical
/// fact about simply connected 4-manifolds): any CP^2 or CP^2-bar summand,
/// or the S_1 closure, turns every S^2 x S^2 into a CP^2 # CP^2-bar pair.
/// Throws PreconditionError on an Unclosed form.
CanonicalForm normalize_sum(const SumForm& f);

}  // namespace sdcalc
