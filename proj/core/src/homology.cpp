#include "sdcalc/homology.hpp"

#include <ostream>
#include <sstream>

#include "sdcalc/error.hpp"

namespace sdcalc {

namespace {

void require_same_genus(const HClass& x, const HClass& y) {
  if (x.genus() != y.genus()) throw GenusMismatch(x.genus(), y.genus());
}

void require_curve(const HClass& v, const char* what) {
  if (!is_primitive(v))
    throw PreconditionError(std::string(what) + " " + v.str() + " is not a primitive class");
}

}  // namespace

HClass::HClass(int genus, std::vector<Int> coeffs) : genus_(genus), coeffs_(std::move(coeffs)) {
  if (genus < 1) throw PreconditionError("genus must be positive");
  if (coeffs_.size() != 2 * static_cast<std::size_t>(genus))
    throw PreconditionError("homology class of genus " + std::to_string(genus) + " needs " +
                            std::to_string(2 * genus) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
}

HClass HClass::zero(int genus) {
  return {genus, std::vector<Int>(2 * static_cast<std::size_t>(genus))};
}

HClass HClass::a(int genus, int i) {
  HClass x = zero(genus);
  x.coeffs_.at(2 * static_cast<std::size_t>(i - 1)) = 1;
  return x;
}

HClass HClass::b(int genus, int i) {
  HClass x = zero(genus);
  x.coeffs_.at(2 * static_cast<std::size_t>(i - 1) + 1) = 1;
  return x;
}

bool HClass::is_zero() const {
  for (const Int& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

HClass HClass::operator-() const {
  HClass x = *this;
  for (Int& c : x.coeffs_) c = -c;
  return x;
}

HClass& HClass::operator+=(const HClass& o) {
  require_same_genus(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

HClass& HClass::operator-=(const HClass& o) {
  require_same_genus(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

HClass operator*(const Int& k, const HClass& x) {
  HClass y = x;
  for (Int& c : y.coeffs_) c *= k;
  return y;
}

std::string HClass::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HClass& x) {
  os << '(';
  for (std::size_t k = 0; k < x.dimension(); ++k) os << (k ? "," : "") << x[k];
  return os << ')';
}

bool same_curve(const HClass& x, const HClass& y) { return x == y || x == -y; }

Int pairing(const HClass& x, const HClass& y) {
  require_same_genus(x, y);
  Int s = 0;
  for (int i = 1; i <= x.genus(); ++i) s += x.na(i) * y.nb(i) - x.nb(i) * y.na(i);
  return s;
}

bool is_primitive(const HClass& x) {
  Int g = 0;
  for (const Int& c : x.coeffs()) {
    g = gcd(g, c);
    if (g == 1) return true;
  }
  return false;
}

HClass twist(const HClass& v, const Int& k, const HClass& x) {
  require_curve(v, "twist axis");
  return x + (k * pairing(v, x)) * v;
}

IntMatrix pairing_matrix(int genus) {
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  IntMatrix j(n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    j(i, i + 1) = 1;
    j(i + 1, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) return false;
  IntMatrix j = pairing_matrix(static_cast<int>(m.rows() / 2));
  return m.transpose() * j * m == j;
}

SpMatrix SpMatrix::identity(int genus) {
  return {genus, IntMatrix::identity(2 * static_cast<std::size_t>(genus))};
}

SpMatrix SpMatrix::from_matrix(int genus, IntMatrix entries) {
  if (entries.rows() != 2 * static_cast<std::size_t>(genus) || entries.cols() != entries.rows())
    throw PreconditionError("switch matrix must be " + std::to_string(2 * genus) + "x" +
                            std::to_string(2 * genus));
  if (!is_symplectic(entries)) throw PreconditionError("matrix does not preserve the intersection pairing");
  return {genus, std::move(entries)};
}

SpMatrix SpMatrix::inverse() const {
  IntMatrix j = pairing_matrix(genus_);
  IntMatrix inv = j * m_.transpose() * j;
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t k = 0; k < inv.cols(); ++k) inv(i, k) = -inv(i, k);
  return {genus_, std::move(inv)};
}

SpMatrix SpMatrix::pow(long long n) const {
  SpMatrix base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  SpMatrix out = identity(genus_);
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

HClass SpMatrix::operator*(const HClass& x) const {
  if (x.genus() != genus_) throw GenusMismatch(genus_, x.genus());
  return {genus_, m_.apply(x.coeffs())};
}

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) {
  if (a.genus_ != b.genus_) throw GenusMismatch(a.genus_, b.genus_);
  return {a.genus_, a.m_ * b.m_};
}

SpMatrix twist_matrix(const HClass& v, const Int& k) {
  require_curve(v, "twist axis");
  const int g = v.genus();
  const std::size_t n = v.dimension();
  // Column j is e_j + k <v, e_j> v, and <v, e_j> is +-v[j^1].
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Int pv = (j % 2 == 0) ? Int(-v[j + 1]) : v[j - 1];
    if (pv.is_zero()) continue;
    const Int f = k * pv;
    for (std::size_t i = 0; i < n; ++i) m(i, j) += f * v[i];
  }
  return {g, std::move(m)};
}

SpMatrix delta_twist(const HClass& a, const HClass& b) {
  if (abs(pairing(a, b)) != 1)
    throw PreconditionError("delta twist needs |<a,b>| = 1, got " + to_string(pairing(a, b)));
  SpMatrix ab = twist_matrix(a, 1) * twist_matrix(b, 1);
  return ab * ab * ab;
}

TwistWord::TwistWord(int genus, std::vector<Twist> factors) : genus_(genus) {
  for (const Twist& t : factors) check(t);
  factors_ = std::move(factors);
}

void TwistWord::check(const Twist& t) const {
  if (t.axis.genus() != genus_) throw GenusMismatch(genus_, t.axis.genus());
  require_curve(t.axis, "twist axis");
  if (t.exponent.is_zero()) throw PreconditionError("twist exponents must be nonzero");
}

void TwistWord::push_right(Twist t) {
  check(t);
  factors_.push_back(std::move(t));
}

void TwistWord::push_left(Twist t) {
  check(t);
  factors_.insert(factors_.begin(), std::move(t));
}

SpMatrix TwistWord::matrix() const {
  SpMatrix m = SpMatrix::identity(genus_);
  for (const Twist& t : factors_) m = m * twist_matrix(t.axis, t.exponent);
  return m;
}

HClass apply_word(const TwistWord& w, const HClass& x) {
  if (x.genus() != w.genus()) throw GenusMismatch(w.genus(), x.genus());
  HClass y = x;
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) y = twist(it->axis, it->exponent, y);
  return y;
}

}  // namespace sdcalc
