#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdcalc/circuit.hpp"
#include "sdcalc/lattice.hpp"

namespace sdcalc {

/// The lift mu~ = T[tau_{gamma_c}(gamma_1)] o ... o T[tau_{gamma_1}(gamma_2)]
/// of a closed untwisted circuit; factor i has axis
/// gamma_{i+1} + <gamma_i, gamma_{i+1}> gamma_i (cyclically).
TwistWord mu_tilde_word(const Circuit& c);
TwistWord mu_tilde_word(const Diagram& d);

SpMatrix mu_tilde_matrix(const Circuit& c);
SpMatrix mu_tilde_matrix(const Diagram& d);

/// Other lifts obtained from the braid relations:
///   T_1^-c (T_c T_1)(T_{c-1} T_c)...(T_1 T_2)
///   T_1^-2c (T_c T_1 T_c)(T_{c-1} T_c T_{c-1})...(T_1 T_2 T_1)
/// and the same two words without the T_1 power (T_1 lies in the kernel of
/// surgery along gamma_1).
std::vector<TwistWord> alternative_lifts(const Circuit& c);

/// Action of a mapping class fixing <base> on the lattice base^perp / <base>,
/// which is H_1 of the surface surgered along base.
struct SurgeredAction {
  HClass base;
  std::size_t quotient_rank = 0;  // 2g - 2
  IntMatrix matrix;               // columns: images of the basis in quotient coordinates
  std::vector<HClass> basis;      // representatives in base^perp

  /// Quotient coordinates of y in base^perp.
  std::vector<Int> coordinates(const HClass& y) const;
};

/// Requires m * base = +-base. Throws PreconditionError otherwise.
SurgeredAction surgered_action_of(const SpMatrix& m, const HClass& base);

SurgeredAction surgered_action(const Circuit& c);
SurgeredAction surgered_action(const Diagram& d);

/// Gram matrix of the induced pairing on the quotient basis.
IntMatrix quotient_pairing(const SurgeredAction& a);

/// Necessary condition for trivial monodromy: the surgered action is the
/// identity. A moved basis class is kept as the witness otherwise.
struct Verdict {
  bool not_obstructed = true;
  std::optional<HClass> witness;

  std::string text() const;
};

Verdict verdict(const SurgeredAction& a);
Verdict verdict(const Circuit& c);

}  // namespace sdcalc
