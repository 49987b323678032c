#include "sdcalc/genus1.hpp"

#include <algorithm>
#include <random>

#include "sdcalc/error.hpp"
#include "sdcalc/handles.hpp"

namespace sdcalc {

std::vector<Int> duality_coefficients(const Circuit& c) {
  if (c.genus() != 1) throw GenusMismatch(1, c.genus());
  if (c.length() < 3) throw PreconditionError("duality coefficients need at least three curves");
  for (std::size_t i = 0; i + 1 < c.length(); ++i) {
    if (!is_primitive(c[i])) throw CircuitError(i + 1, "not primitive");
    if (pairing(c[i], c[i + 1]) != 1) throw CircuitError(i + 1, "not oriented dual to curve " + std::to_string(i + 2));
  }
  std::vector<Int> ks;
  for (std::size_t i = 2; i < c.length(); ++i) {
    // gamma_{i-1}, gamma_i form a basis with <gamma_{i-1}, gamma_i> = 1
    const HClass& p = c[i - 2];
    const HClass& q = c[i - 1];
    const HClass s = c[i] + p;
    const Int k = pairing(p, s);  // s = k q  =>  <p, s> = k
    if (k * q != s) throw InvariantViolation("curve " + std::to_string(i + 1) + " is not a multiple of curve " + std::to_string(i) + " after adding curve " + std::to_string(i - 1));
    ks.push_back(k);
  }
  return ks;
}

std::vector<Int> sigma_sequence(const std::vector<Int>& ks) {
  std::vector<Int> s{0, 1};
  for (const Int& k : ks) s.push_back(k * s[s.size() - 1] - s[s.size() - 2]);
  return s;
}

bool closed_by_recursion(const Circuit& c) {
  if (c.length() == 2) return true;
  return abs(sigma_sequence(duality_coefficients(c)).back()) == 1;
}

namespace {

bool contractible(const Detection& det) { return !det.is_hayano(); }

}  // namespace

Classification classify(const Diagram& d, const ClassifyOptions& options) {
  if (d.genus() != 1) throw PreconditionError("classifier requires genus 1");
  if (d.twisted()) throw PreconditionError("classifier requires an untwisted diagram");
  if (!d.closed()) throw PreconditionError("classifier requires a closed diagram");
  require_valid(d);

  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  Classification out;
  Diagram cur = d;
  while (cur.length() > 2) {
    std::vector<Detection> found = detect(cur);
    std::erase_if(found, [](const Detection& x) { return !contractible(x); });
    if (found.empty())
      throw InvariantViolation("no blow-up or stabilization in a closed genus-1 circuit of length " + std::to_string(cur.length()));
    const Detection* pick = nullptr;
    if (rng) {
      pick = &found[std::uniform_int_distribution<std::size_t>(0, found.size() - 1)(*rng)];
    } else {
      auto blowup = std::find_if(found.begin(), found.end(), [](const Detection& x) { return x.is_blowup(); });
      pick = blowup != found.end() ? &*blowup : &found.front();
    }
    Contraction c = contract(cur, *pick);
    cur = std::move(c.diagram);
    out.reduced += c.delta;
    out.trace.push_back({out.trace.size() + 1, *pick, c.delta, cur.length()});
  }

  for (Closure closure : {Closure::Spin0, Closure::NonSpin1}) {
    SumForm f = out.reduced;
    f.closure = closure;
    const CanonicalForm form = normalize_sum(f);
    if (std::find(out.canonical_forms.begin(), out.canonical_forms.end(), form) == out.canonical_forms.end())
      out.canonical_forms.push_back(form);
  }

  const auto& r = out.reduced;
  if (4 + 2 * r.l + r.m + r.n != 2 + d.length())
    throw InvariantViolation("Euler characteristic of the reduction disagrees with the circuit length");
  const FormInvariants inv = form_invariants(intersection_form(d.circuit()));
  for (const CanonicalForm& f : out.canonical_forms)
    if (f.signature() != inv.signature)
      throw InvariantViolation("classification " + f.str() + " contradicts intersection form signature " + std::to_string(inv.signature));
  return out;
}

}  // namespace sdcalc
