#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sdcalc/homology.hpp"

namespace sdcalc {

/// Curve data on the torus is exact (homology determines isotopy and
/// geometric intersection); on higher genus surfaces every check works on
/// the homological shadow only and is a necessary condition.
enum class Exactness { Exact, HomologicalOnly };

inline Exactness exactness_for(int genus) {
  return genus == 1 ? Exactness::Exact : Exactness::HomologicalOnly;
}

const char* to_string(Exactness e);

/// Ordered curves (gamma_1, ..., gamma_c) on a closed genus-g surface.
///
/// Construction only checks structure (non-empty, one genus). The duality
/// axioms and the orientation convention <gamma_i, gamma_{i+1}> = +1 are
/// established by `normalize` and checked by `validate`.
class Circuit {
 public:
  Circuit(std::vector<HClass> curves, bool closed);

  int genus() const noexcept { return curves_.front().genus(); }
  std::size_t length() const noexcept { return curves_.size(); }
  bool closed() const noexcept { return closed_; }
  const std::vector<HClass>& curves() const noexcept { return curves_; }
  /// 0-based access; positions in the rest of the API are 1-based.
  const HClass& operator[](std::size_t i) const { return curves_[i]; }

  /// <gamma_c, gamma_1>; +-1 on a valid closed circuit.
  Int closing_pairing() const { return pairing(curves_.back(), curves_.front()); }

  /// Every curve negated; the same unoriented circuit.
  Circuit negated() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<HClass> curves_;
  bool closed_;
};

std::ostream& operator<<(std::ostream& os, const Circuit& c);

/// Same unoriented diagram: equal, or equal after negating every curve.
bool same_unoriented(const Circuit& x, const Circuit& y);

/// A circuit together with an optional switch. Without a switch the diagram
/// is untwisted (switch = identity). When closed, the closing pair is
/// (switch * gamma_c, gamma_1).
class Diagram {
 public:
  explicit Diagram(Circuit c) : circuit_(std::move(c)) {}
  Diagram(Circuit c, std::optional<SpMatrix> mu);

  const Circuit& circuit() const noexcept { return circuit_; }
  int genus() const noexcept { return circuit_.genus(); }
  std::size_t length() const noexcept { return circuit_.length(); }
  bool closed() const noexcept { return circuit_.closed(); }
  bool twisted() const noexcept { return switch_.has_value(); }
  const std::optional<SpMatrix>& switch_matrix() const noexcept { return switch_; }
  /// The switch, identity when untwisted.
  SpMatrix effective_switch() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Circuit circuit_;
  std::optional<SpMatrix> switch_;
};

std::ostream& operator<<(std::ostream& os, const Diagram& d);

/// Flips signs so that <gamma_i, gamma_{i+1}> = +1 for i < c, keeping the
/// sign of gamma_1. Throws CircuitError for non-primitive entries, adjacent
/// pairs that are not dual, or (when closed) a non-dual closing pair.
Circuit normalize(std::vector<HClass> raw, bool closed,
                  const std::optional<SpMatrix>& mu = std::nullopt);

struct ValidationFailure {
  std::size_t index;  // 1-based curve index
  std::string reason;
};

struct ValidationReport {
  bool ok = true;
  Exactness exactness = Exactness::Exact;
  std::vector<ValidationFailure> failures;
};

/// Reports every violated circuit axiom; never throws.
ValidationReport validate(const Diagram& d);
ValidationReport validate(const Circuit& c);

/// Throws CircuitError carrying the first failure.
void require_valid(const Diagram& d);
void require_valid(const Circuit& c);

/// Applies Gamma -> (mu gamma_c, gamma_1, ..., gamma_{c-1}) k times (the
/// inverse for negative k). The moved curve takes the sign that restores the
/// orientation convention, every other curve keeps its sign, so
/// switch_diagram(switch_diagram(d, k), -k) == d.
Diagram switch_diagram(const Diagram& d, long long k);

/// The double (gamma_1, ..., gamma_l, gamma_{l-1}, ..., gamma_2): a closed
/// circuit of length 2l - 2.
Circuit double_circuit(const Circuit& c);

/// `len` consecutive curves starting at 1-based position `pos`, continuing
/// cyclically past gamma_c with mu^-1 gamma_1, mu^-1 gamma_2, ... and
/// re-oriented so that consecutive pairings are +1. The first curve keeps its
/// sign. Requires a closed diagram whenever the window wraps.
std::vector<HClass> cyclic_window(const Diagram& d, std::size_t pos, std::size_t len);

}  // namespace sdcalc
