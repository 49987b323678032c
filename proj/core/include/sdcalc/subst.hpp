#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "sdcalc/circuit.hpp"
#include "sdcalc/sum_form.hpp"

namespace sdcalc {

/// (a, tau_b^e(a), b): Z picks up CP^2-bar for e = +1 and CP^2 for e = -1.
struct BlowUpPattern {
  int exponent;
  Summand summand;
  /// Fiber framing of the middle curve in the standard picture. Equals -e
  /// when (a, b) is the standard pair (a_i, b_i), but depends on the frame in
  /// general, so the summand is read from the exponent.
  Int middle_framing;
};

/// (a, b, tau_b^k(a), b): Z picks up S_{-k}.
struct StabilizationPattern {
  Int k;
  Summand summand;
};

/// (c, tau_c^k(d), c): surgery on d. d is only defined up to the tau_c orbit;
/// the reported representative minimizes |k|.
struct HayanoPattern {
  HClass dual;
  Int k;
};

struct Detection {
  std::variant<BlowUpPattern, StabilizationPattern, HayanoPattern> kind;
  std::size_t position;       // 1-based index of the pattern's first curve
  Exactness exactness;        // homological-only candidates for genus >= 2
  std::vector<HClass> window;  // the oriented curves that matched

  bool is_blowup() const { return std::holds_alternative<BlowUpPattern>(kind); }
  bool is_stabilization() const { return std::holds_alternative<StabilizationPattern>(kind); }
  bool is_hayano() const { return std::holds_alternative<HayanoPattern>(kind); }
  std::string describe() const;
};

/// Inserts tau_{gamma_{pos+1}}^e(gamma_pos) between gamma_pos and
/// gamma_{pos+1} (pos = c means the closing pair). e must be +-1.
Diagram apply_blowup(const Diagram& d, std::size_t pos, int e);

/// Inserts tau_{gamma_{pos+1}}^k(gamma_pos), gamma_{pos+1} after the pair.
Diagram apply_stabilization(const Diagram& d, std::size_t pos, const Int& k);

enum class SurgeryFraming { Fiber, Opposite };

const char* to_string(SurgeryFraming f);

struct SurgeryResult {
  Diagram diagram;
  SurgeryFraming framing;  // fiber framing for even k, opposite for odd k
};

/// Replaces gamma_pos by (gamma_pos, tau_{gamma_pos}^k(dual), gamma_pos).
SurgeryResult hayano_surgery(const Diagram& d, std::size_t pos, const HClass& dual, const Int& k);

/// Every blow-up, stabilization and Hayano pattern at every cyclic position,
/// ascending by position. Sign-insensitive matching.
std::vector<Detection> detect(const Diagram& d);

struct Contraction {
  Diagram diagram;
  SumForm delta;
};

/// Removes the inserted curve(s) of a blow-up or stabilization detection.
/// Throws PreconditionError if the pattern no longer matches `d` or for
/// Hayano detections.
Contraction contract(const Diagram& d, const Detection& det);

}  // namespace sdcalc
