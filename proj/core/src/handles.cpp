#include "sdcalc/handles.hpp"

#include <sstream>

#include "sdcalc/error.hpp"

namespace sdcalc {

Int fiber_framing(const HClass& x) {
  if (x.is_zero()) throw PreconditionError("framing of the zero class");
  Int s = 0;
  for (int i = 1; i <= x.genus(); ++i) s += x.na(i) * x.nb(i);
  return s;
}

Int linking(const HClass& x, std::size_t i, const HClass& y, std::size_t j) {
  if (i == j) throw PreconditionError("linking needs distinct attachment positions");
  const int sgn = i > j ? 1 : -1;
  Int twice = sgn * pairing(x, y);
  for (int k = 1; k <= x.genus(); ++k) twice += x.na(k) * y.nb(k) + y.na(k) * x.nb(k);
  // <x,y> and the symmetric sum agree mod 2: both reduce to sum (x_a y_b + x_b y_a).
  if (boost::multiprecision::bit_test(twice, 0)) throw InvariantViolation("half-integral linking number");
  return twice / 2;
}

LinkingMatrix linking_matrix(const Circuit& c) {
  require_valid(c);
  const std::size_t n = c.length();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = fiber_framing(c[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = linking(c[i], i + 1, c[j], j + 1);
      m(j, i) = m(i, j);
    }
  }
  return {std::move(m)};
}

IntMatrix intersection_form(const Circuit& c) {
  const LinkingMatrix lk = linking_matrix(c);
  const std::size_t n = c.length();
  IntMatrix boundary(c[0].dimension(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < c[j].dimension(); ++i) boundary(i, j) = c[j][i];
  const IntMatrix k = kernel_basis(boundary);
  return k.transpose() * (lk.entries * k);
}

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

FormInvariants form_invariants(const IntMatrix& m) {
  if (!m.is_symmetric()) throw PreconditionError("form invariants need a symmetric matrix");
  const std::size_t n = m.rows();
  FormInvariants out;
  for (std::size_t i = 0; i < n; ++i)
    if (boost::multiprecision::bit_test(m(i, i), 0)) out.parity = Parity::Odd;

  // Fraction-free congruence: each Schur complement is scaled by a positive
  // factor and divided by the content of what is left, so entries stay small
  // and the inertia is unchanged.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  std::vector<bool> alive(n, true);

  auto reduce_content = [&] {
    Int g = 0;
    for (std::size_t i = 0; i < n && g != 1; ++i)
      if (alive[i])
        for (std::size_t j = i; j < n && g != 1; ++j)
          if (alive[j] && !a[i][j].is_zero()) g = gcd(g, a[i][j]);
    if (g <= 1) return;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i])
        for (std::size_t j = 0; j < n; ++j)
          if (alive[j]) a[i][j] /= g;
  };

  auto eliminate_single = [&](std::size_t p) {
    const Int d = a[p][p];
    const int sd = sign(d);
    const Int ad = abs(d);
    out.rank += 1;
    out.signature += sd;
    alive[p] = false;
    for (std::size_t r = 0; r < n; ++r) {
      if (!alive[r]) continue;
      for (std::size_t s = r; s < n; ++s) {
        if (!alive[s]) continue;
        Int v = ad * a[r][s];
        if (!a[r][p].is_zero() && !a[p][s].is_zero()) v -= sd * a[r][p] * a[p][s];
        a[r][s] = v;
        a[s][r] = v;
      }
    }
  };
  // Zero diagonal: split off [[0, b], [b, 0]] (rank 2, signature 0).
  auto eliminate_block = [&](std::size_t p, std::size_t q) {
    const Int b = a[p][q];
    const int sb = sign(b);
    const Int ab = abs(b);
    out.rank += 2;
    alive[p] = alive[q] = false;
    for (std::size_t r = 0; r < n; ++r) {
      if (!alive[r]) continue;
      for (std::size_t s = r; s < n; ++s) {
        if (!alive[s]) continue;
        const Int v = ab * a[r][s] - sb * (a[r][p] * a[q][s] + a[r][q] * a[p][s]);
        a[r][s] = v;
        a[s][r] = v;
      }
    }
  };

  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && !a[i][i].is_zero() && (pivot == n || abs(a[i][i]) < abs(a[pivot][pivot]))) pivot = i;
    if (pivot != n) {
      eliminate_single(pivot);
      reduce_content();
      continue;
    }
    std::size_t p = n, q = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (alive[i] && alive[j] && !a[i][j].is_zero()) {
          p = i;
          q = j;
          break;
        }
    if (p == n) break;
    eliminate_block(p, q);
    reduce_content();
  }
  return out;
}

EulerCharacteristics euler_characteristics(const Circuit& c) {
  require_valid(c);
  const long long g = c.genus();
  const long long len = static_cast<long long>(c.length());
  EulerCharacteristics e{2 - 2 * g + len, std::nullopt};
  if (c.closed()) e.closed_manifold = 6 - 4 * g + len;
  return e;
}

KirbyData emit_kirby(const Circuit& c, std::optional<Int> section_k) {
  require_valid(c);
  if (section_k && !c.closed()) throw PreconditionError("a section can only close off a closed circuit");
  KirbyData k;
  k.genus = c.genus();
  for (int i = 1; i <= k.genus; ++i) {
    k.one_handles.push_back("a" + std::to_string(i));
    k.one_handles.push_back("b" + std::to_string(i));
  }
  for (std::size_t i = 0; i < c.length(); ++i) k.fold_handles.push_back({c[i], fiber_framing(c[i]), i + 1});
  k.last_handle = std::move(section_k);
  k.linking = linking_matrix(c);
  return k;
}

std::string to_text(const KirbyData& k) {
  std::ostringstream os;
  os << "1-handles (dotted circles):";
  for (const std::string& h : k.one_handles) os << ' ' << h;
  os << "\nfiber 2-handle: framing " << k.fiber_handle_framing << '\n';
  for (const FoldHandle& f : k.fold_handles)
    os << "fold 2-handle " << f.position << ": curve " << f.curve << ", framing " << f.framing << '\n';
  if (k.last_handle) os << "last 2-handle: " << *k.last_handle << "-framed meridian of the fiber 2-handle\n";
  os << "linking matrix: " << k.linking.entries << '\n';
  return os.str();
}

BlfData to_blf(const Circuit& c) {
  require_valid(c);
  if (!c.closed()) throw PreconditionError("the broken Lefschetz conversion needs a closed circuit");
  BlfData out{{}, c[0]};
  const std::size_t n = c.length();
  for (std::size_t i = 0; i < n; ++i) out.lefschetz_cycles.push_back(twist(c[i], 1, c[(i + 1) % n]));
  return out;
}

}  // namespace sdcalc
