#include "sdcalc/circuit.hpp"

#include <algorithm>
#include <ostream>

#include "sdcalc/error.hpp"

namespace sdcalc {

const char* to_string(Exactness e) {
  return e == Exactness::Exact ? "exact" : "homological-only";
}

Circuit::Circuit(std::vector<HClass> curves, bool closed) : curves_(std::move(curves)), closed_(closed) {
  if (curves_.empty()) throw PreconditionError("a circuit needs at least one curve");
  for (const HClass& x : curves_)
    if (x.genus() != curves_.front().genus()) throw GenusMismatch(curves_.front().genus(), x.genus());
}

std::ostream& operator<<(std::ostream& os, const Circuit& c) {
  os << '(';
  for (std::size_t i = 0; i < c.length(); ++i) os << (i ? ", " : "") << c[i];
  return os << ')' << (c.closed() ? "" : " open");
}

std::ostream& operator<<(std::ostream& os, const Diagram& d) {
  os << d.circuit();
  if (d.twisted()) os << " switch " << d.switch_matrix()->matrix();
  return os;
}

Circuit Circuit::negated() const {
  std::vector<HClass> out;
  out.reserve(curves_.size());
  for (const HClass& x : curves_) out.push_back(-x);
  return {std::move(out), closed_};
}

bool same_unoriented(const Circuit& x, const Circuit& y) {
  return x == y || x == y.negated();
}

Diagram::Diagram(Circuit c, std::optional<SpMatrix> mu) : circuit_(std::move(c)), switch_(std::move(mu)) {
  if (switch_ && switch_->genus() != circuit_.genus()) throw GenusMismatch(circuit_.genus(), switch_->genus());
}

SpMatrix Diagram::effective_switch() const {
  return switch_ ? *switch_ : SpMatrix::identity(genus());
}

namespace {

void orient(std::vector<HClass>& curves) {
  for (std::size_t i = 1; i < curves.size(); ++i)
    if (pairing(curves[i - 1], curves[i]) == -1) curves[i] = -curves[i];
}

Int closing_pairing(const std::vector<HClass>& curves, const std::optional<SpMatrix>& mu) {
  return mu ? pairing(*mu * curves.back(), curves.front()) : pairing(curves.back(), curves.front());
}

std::vector<ValidationFailure> failures_of(const std::vector<HClass>& curves, bool closed,
                                           const std::optional<SpMatrix>& mu) {
  std::vector<ValidationFailure> out;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (!is_primitive(curves[i])) out.push_back({i + 1, "not primitive"});
  for (std::size_t i = 0; i + 1 < curves.size(); ++i) {
    const Int p = pairing(curves[i], curves[i + 1]);
    if (p == -1)
      out.push_back({i + 1, "orientation convention violated (pairing with curve " + std::to_string(i + 2) +
                                " is -1)"});
    else if (p != 1)
      out.push_back({i + 1, "not dual to curve " + std::to_string(i + 2) + " (pairing " + to_string(p) + ")"});
  }
  if (closed) {
    if (curves.size() < 2) {
      out.push_back({1, "a closed circuit needs at least two curves"});
    } else {
      const Int q = closing_pairing(curves, mu);
      if (abs(q) != 1)
        out.push_back({curves.size(), "closing pair not dual (pairing " + to_string(q) + ")"});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ValidationFailure& a, const ValidationFailure& b) { return a.index < b.index; });
  return out;
}

}  // namespace

Circuit normalize(std::vector<HClass> raw, bool closed, const std::optional<SpMatrix>& mu) {
  if (raw.empty()) throw PreconditionError("a circuit needs at least one curve");
  Circuit structural(raw, closed);  // genus agreement
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!is_primitive(raw[i])) throw CircuitError(i + 1, "not primitive");
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    const Int p = pairing(raw[i], raw[i + 1]);
    if (abs(p) != 1)
      throw CircuitError(i + 1, "not dual to curve " + std::to_string(i + 2) + " (pairing " + to_string(p) + ")");
  }
  orient(raw);
  if (closed) {
    if (raw.size() < 2) throw CircuitError(1, "a closed circuit needs at least two curves");
    const Int q = closing_pairing(raw, mu);
    if (abs(q) != 1) throw CircuitError(raw.size(), "closing pair not dual (pairing " + to_string(q) + ")");
  }
  return {std::move(raw), closed};
}

ValidationReport validate(const Diagram& d) {
  ValidationReport r;
  r.exactness = exactness_for(d.genus());
  r.failures = failures_of(d.circuit().curves(), d.closed(), d.switch_matrix());
  r.ok = r.failures.empty();
  return r;
}

ValidationReport validate(const Circuit& c) { return validate(Diagram(c)); }

void require_valid(const Diagram& d) {
  ValidationReport r = validate(d);
  if (!r.ok) throw CircuitError(r.failures.front().index, r.failures.front().reason);
}

void require_valid(const Circuit& c) { require_valid(Diagram(c)); }

Diagram switch_diagram(const Diagram& d, long long k) {
  if (!d.closed()) throw PreconditionError("switching needs a closed diagram");
  require_valid(d);
  std::vector<HClass> curves = d.circuit().curves();
  if (curves.size() < 2 || k == 0) return d;
  const SpMatrix mu = d.effective_switch();
  const SpMatrix mu_inv = mu.inverse();
  for (long long s = 0; s < k; ++s) {
    HClass moved = mu * curves.back();
    if (pairing(moved, curves.front()) == -1) moved = -moved;
    curves.pop_back();
    curves.insert(curves.begin(), std::move(moved));
  }
  for (long long s = 0; s > k; --s) {
    HClass moved = mu_inv * curves.front();
    if (pairing(curves.back(), moved) == -1) moved = -moved;
    curves.erase(curves.begin());
    curves.push_back(std::move(moved));
  }
  return {Circuit(std::move(curves), true), d.switch_matrix()};
}

Circuit double_circuit(const Circuit& c) {
  require_valid(c);
  if (c.length() < 2) throw PreconditionError("the double needs a circuit of length at least 2");
  std::vector<HClass> out = c.curves();
  for (std::size_t i = c.length() - 1; i-- > 1;) out.push_back(c[i]);
  return normalize(std::move(out), true);
}

std::vector<HClass> cyclic_window(const Diagram& d, std::size_t pos, std::size_t len) {
  const std::size_t c = d.length();
  if (pos < 1 || pos > c) throw PreconditionError("position " + std::to_string(pos) + " out of range 1.." + std::to_string(c));
  if (pos - 1 + len > c && !d.closed()) throw PreconditionError("window wraps around an open circuit");
  std::vector<HClass> out;
  out.reserve(len);
  std::optional<SpMatrix> mu_inv;
  if (d.twisted()) mu_inv = d.switch_matrix()->inverse();
  for (std::size_t idx = pos - 1; idx < pos - 1 + len; ++idx) {
    HClass x = d.circuit()[idx % c];
    if (mu_inv)
      for (std::size_t w = idx / c; w > 0; --w) x = *mu_inv * x;
    out.push_back(std::move(x));
  }
  orient(out);
  return out;
}

}  // namespace sdcalc
