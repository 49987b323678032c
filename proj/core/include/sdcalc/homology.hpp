#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sdcalc/integer.hpp"
#include "sdcalc/lattice.hpp"

namespace sdcalc {

/// First homology class of the closed genus-g surface, written in the
/// standard symplectic basis as (n_a1, n_b1, ..., n_ag, n_bg) with
/// <a_i, b_i> = +1. Curves are unoriented, so a class and its negative
/// describe the same curve; operations that model curves are sign-invariant.
class HClass {
 public:
  HClass(int genus, std::vector<Int> coeffs);

  static HClass zero(int genus);
  /// a_i and b_i for 1 <= i <= genus.
  static HClass a(int genus, int i);
  static HClass b(int genus, int i);

  int genus() const noexcept { return genus_; }
  std::size_t dimension() const noexcept { return coeffs_.size(); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  const Int& operator[](std::size_t k) const { return coeffs_[k]; }

  /// n_{a_i} and n_{b_i}, 1-based handle index.
  const Int& na(int i) const { return coeffs_[2 * static_cast<std::size_t>(i - 1)]; }
  const Int& nb(int i) const { return coeffs_[2 * static_cast<std::size_t>(i - 1) + 1]; }

  bool is_zero() const;

  HClass operator-() const;
  HClass& operator+=(const HClass& o);
  HClass& operator-=(const HClass& o);
  friend HClass operator+(HClass x, const HClass& y) { return x += y; }
  friend HClass operator-(HClass x, const HClass& y) { return x -= y; }
  friend HClass operator*(const Int& k, const HClass& x);
  friend bool operator==(const HClass&, const HClass&) = default;

  std::string str() const;

 private:
  int genus_;
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HClass& x);

/// x == y or x == -y.
bool same_curve(const HClass& x, const HClass& y);

/// Algebraic intersection number <x, y>.
Int pairing(const HClass& x, const HClass& y);

/// gcd of the entries is 1 (the zero class is not primitive).
bool is_primitive(const HClass& x);

/// Picard-Lefschetz: x + k <v, x> v. Requires v primitive.
HClass twist(const HClass& v, const Int& k, const HClass& x);

/// 2g x 2g integer matrix preserving the intersection pairing, acting on
/// column vectors. Every instance satisfies M^T J M = J.
class SpMatrix {
 public:
  static SpMatrix identity(int genus);
  /// Throws PreconditionError unless the entries form a symplectic matrix.
  static SpMatrix from_matrix(int genus, IntMatrix entries);

  int genus() const noexcept { return genus_; }
  const IntMatrix& matrix() const noexcept { return m_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// Symplectic inverse -J M^T J (exact, no division).
  SpMatrix inverse() const;
  SpMatrix pow(long long n) const;
  bool is_identity() const { return m_.is_identity(); }

  HClass operator*(const HClass& x) const;
  friend SpMatrix operator*(const SpMatrix& a, const SpMatrix& b);
  friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

 private:
  SpMatrix(int genus, IntMatrix m) : genus_(genus), m_(std::move(m)) {}
  friend SpMatrix twist_matrix(const HClass&, const Int&);

  int genus_;
  IntMatrix m_;
};

/// Block-diagonal pairing matrix J with J_ij = <e_i, e_j>.
IntMatrix pairing_matrix(int genus);

bool is_symplectic(const IntMatrix& m);

/// Matrix of x -> x + k <v, x> v. Independent of the sign of v.
SpMatrix twist_matrix(const HClass& v, const Int& k);

/// Delta twist (T_a T_b)^3 for |<a, b>| = 1: -1 on span(a, b), identity on its
/// symplectic complement.
SpMatrix delta_twist(const HClass& a, const HClass& b);

struct Twist {
  HClass axis;
  Int exponent;
};

/// Word in Dehn-twist powers. Factors are written left to right and applied
/// rightmost first, so {t1, t2} means t1 o t2.
class TwistWord {
 public:
  explicit TwistWord(int genus) : genus_(genus) {}
  TwistWord(int genus, std::vector<Twist> factors);

  int genus() const noexcept { return genus_; }
  const std::vector<Twist>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }

  /// Appends a factor on the right (applied before everything already present).
  void push_right(Twist t);
  /// Prepends a factor on the left (applied after everything already present).
  void push_left(Twist t);

  SpMatrix matrix() const;

 private:
  void check(const Twist& t) const;

  int genus_;
  std::vector<Twist> factors_;
};

HClass apply_word(const TwistWord& w, const HClass& x);

}  // namespace sdcalc
