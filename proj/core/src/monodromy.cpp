#include "sdcalc/monodromy.hpp"

#include "sdcalc/error.hpp"

namespace sdcalc {

namespace {

void require_closed(const Circuit& c) {
  if (!c.closed()) throw PreconditionError("the monodromy lift needs a closed circuit");
  require_valid(c);
}

const Circuit& untwisted(const Diagram& d) {
  if (d.twisted()) throw PreconditionError("the monodromy lift is defined for untwisted diagrams");
  return d.circuit();
}

// Kernel of the pairing with `base`, re-based so that its first vector is base.
struct QuotientFrame {
  IntMatrix to_kernel;  // T^-1 of the column echelon: kernel coords in rows 1..
  IntMatrix rebase;     // R with R z_base = e_1
  std::vector<HClass> basis;
};

QuotientFrame frame_for(const HClass& base) {
  const int g = base.genus();
  const std::size_t n = base.dimension();
  IntMatrix row(1, n);
  for (std::size_t j = 0; j < n; j += 2) {
    row(0, j) = -base[j + 1];  // <x, a_i> = -n_bi
    row(0, j + 1) = base[j];   // <x, b_i> = n_ai
  }
  const ColumnEchelon e = column_echelon(row);
  if (e.rank != 1) throw PreconditionError("base class must be nonzero");
  const std::vector<Int> t = e.inverse.apply(std::span<const Int>(base.coeffs()));
  const std::vector<Int> z(t.begin() + 1, t.end());
  const VectorReduction r = reduce_vector(z);
  if (r.gcd != 1) throw PreconditionError("base class must be primitive");

  QuotientFrame f{e.inverse, r.transform, {}};
  // K R^-1: columns 1.. of the transform are the kernel basis K
  for (std::size_t j = 1; j < n - 1; ++j) {
    std::vector<Int> v(n);
    for (std::size_t k = 0; k < n - 1; ++k) {
      const Int& w = r.inverse(k, j);
      if (w.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] += e.transform(i, k + 1) * w;
    }
    f.basis.emplace_back(g, std::move(v));
  }
  return f;
}

std::vector<Int> frame_coordinates(const QuotientFrame& f, const HClass& y) {
  const std::vector<Int> t = f.to_kernel.apply(std::span<const Int>(y.coeffs()));
  if (!t.front().is_zero()) throw PreconditionError(y.str() + " does not lie in the orthogonal complement");
  const std::vector<Int> z(t.begin() + 1, t.end());
  const std::vector<Int> w = f.rebase.apply(z);
  return {w.begin() + 1, w.end()};
}

}  // namespace

TwistWord mu_tilde_word(const Circuit& c) {
  require_closed(c);
  const std::size_t n = c.length();
  TwistWord w(c.genus());
  for (std::size_t i = 0; i < n; ++i) {
    const HClass& x = c[i];
    const HClass& y = c[(i + 1) % n];
    w.push_left({y + pairing(x, y) * x, 1});
  }
  return w;
}

TwistWord mu_tilde_word(const Diagram& d) { return mu_tilde_word(untwisted(d)); }

SpMatrix mu_tilde_matrix(const Circuit& c) { return mu_tilde_word(c).matrix(); }
SpMatrix mu_tilde_matrix(const Diagram& d) { return mu_tilde_matrix(untwisted(d)); }

std::vector<TwistWord> alternative_lifts(const Circuit& c) {
  require_closed(c);
  const std::size_t n = c.length();
  const Int len(static_cast<long long>(n));
  TwistWord pairs(c.genus()), triples(c.genus());
  for (std::size_t i = n; i-- > 0;) {
    const HClass& x = c[i];
    const HClass& y = c[(i + 1) % n];
    pairs.push_right({x, 1});
    pairs.push_right({y, 1});
    triples.push_right({x, 1});
    triples.push_right({y, 1});
    triples.push_right({x, 1});
  }
  TwistWord pairs_lift = pairs, triples_lift = triples;
  pairs_lift.push_left({c[0], -len});
  triples_lift.push_left({c[0], -2 * len});
  return {pairs_lift, triples_lift, pairs, triples};
}

std::vector<Int> SurgeredAction::coordinates(const HClass& y) const {
  return frame_coordinates(frame_for(base), y);
}

SurgeredAction surgered_action_of(const SpMatrix& m, const HClass& base) {
  const HClass image = m * base;
  if (!same_curve(image, base)) throw PreconditionError("mapping class does not preserve " + base.str());
  const QuotientFrame f = frame_for(base);
  const std::size_t r = f.basis.size();
  SurgeredAction a{base, r, IntMatrix(r, r), f.basis};
  for (std::size_t j = 0; j < r; ++j) {
    const std::vector<Int> col = frame_coordinates(f, m * f.basis[j]);
    for (std::size_t i = 0; i < r; ++i) a.matrix(i, j) = col[i];
  }
  return a;
}

SurgeredAction surgered_action(const Circuit& c) { return surgered_action_of(mu_tilde_matrix(c), c[0]); }
SurgeredAction surgered_action(const Diagram& d) { return surgered_action(untwisted(d)); }

IntMatrix quotient_pairing(const SurgeredAction& a) {
  IntMatrix g(a.quotient_rank, a.quotient_rank);
  for (std::size_t i = 0; i < a.quotient_rank; ++i)
    for (std::size_t j = 0; j < a.quotient_rank; ++j) g(i, j) = pairing(a.basis[i], a.basis[j]);
  return g;
}

std::string Verdict::text() const {
  if (not_obstructed) return "not obstructed on homology";
  return "obstructed on homology: " + witness->str() + " is moved";
}

Verdict verdict(const SurgeredAction& a) {
  for (std::size_t j = 0; j < a.quotient_rank; ++j)
    for (std::size_t i = 0; i < a.quotient_rank; ++i)
      if (a.matrix(i, j) != (i == j ? 1 : 0)) return {false, a.basis[j]};
  return {};
}

Verdict verdict(const Circuit& c) { return verdict(surgered_action(c)); }

}  // namespace sdcalc
