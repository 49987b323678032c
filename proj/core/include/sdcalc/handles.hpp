#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdcalc/circuit.hpp"
#include "sdcalc/lattice.hpp"

namespace sdcalc {

/// Framing coefficient of the fiber framing, sum_i n_ai(x) n_bi(x), in the
/// standard Kirby picture of Sigma_g x D^2. Sign-invariant.
Int fiber_framing(const HClass& x);

/// Linking number of curves attached at angular positions i != j (the angle
/// order is the index order):
///   1/2 sgn(i - j) <x, y> + 1/2 sum_k (n_ak(x) n_bk(y) + n_ak(y) n_bk(x)).
Int linking(const HClass& x, std::size_t i, const HClass& y, std::size_t j);

/// Symmetric c x c matrix: fold-handle framings on the diagonal, pairwise
/// linking numbers off it, in attachment order.
struct LinkingMatrix {
  IntMatrix entries;

  std::size_t size() const noexcept { return entries.rows(); }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

LinkingMatrix linking_matrix(const Circuit& c);

/// The form the linking matrix induces on the lattice of fold-handle
/// combinations whose attaching curves cancel in H_1 of the fiber (those are
/// the combinations that close up into 2-cycles). Unlike the raw linking
/// matrix, its congruence class does not depend on the choice of symplectic
/// basis.
IntMatrix intersection_form(const Circuit& c);

enum class Parity { Even, Odd };

const char* to_string(Parity p);

struct FormInvariants {
  std::size_t rank = 0;
  long long signature = 0;
  Parity parity = Parity::Even;

  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

/// Rank and signature by exact fraction-free congruence diagonalization; a zero
/// diagonal meeting a nonzero off-diagonal entry is split off as a hyperbolic
/// 2 x 2 block. Parity is Even iff every diagonal entry is even.
FormInvariants form_invariants(const IntMatrix& symmetric);
inline FormInvariants form_invariants(const LinkingMatrix& m) { return form_invariants(m.entries); }

struct EulerCharacteristics {
  long long total_space_over_disk;           // chi(Z) = 2 - 2g + c
  std::optional<long long> closed_manifold;  // chi(X) = 6 - 4g + c, closed circuits only
};

EulerCharacteristics euler_characteristics(const Circuit& c);

struct FoldHandle {
  HClass curve;
  Int framing;
  std::size_t position;  // 1-based attachment order
};

struct KirbyData {
  int genus = 1;
  std::vector<std::string> one_handles;  // dotted circles a1, b1, ..., ag, bg
  Int fiber_handle_framing = 0;
  std::vector<FoldHandle> fold_handles;
  std::optional<Int> last_handle;  // section self-intersection k: k-framed meridian of the fiber handle
  LinkingMatrix linking;

  std::size_t handle_count() const {
    return one_handles.size() + 1 + fold_handles.size() + (last_handle ? 1 : 0);
  }
};

/// Handle data of Z (and of the closed manifold when a section
/// self-intersection is supplied).
KirbyData emit_kirby(const Circuit& c, std::optional<Int> section_k = std::nullopt);

std::string to_text(const KirbyData& k);

/// Vanishing cycles of the broken Lefschetz fibration obtained by unsinking
/// every cusp: lambda_i = tau_{gamma_i}(gamma_{i+1}) (cyclically) with
/// framing -1, and the round cycle rho = gamma_1 with framing 0.
struct BlfData {
  std::vector<HClass> lefschetz_cycles;
  HClass round_cycle;

  static constexpr int lefschetz_framing = -1;
  static constexpr int round_framing = 0;
};

BlfData to_blf(const Circuit& c);

}  // namespace sdcalc
