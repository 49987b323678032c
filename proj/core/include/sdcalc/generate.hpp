#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sdcalc/circuit.hpp"
#include "sdcalc/sum_form.hpp"

namespace sdcalc {

struct GeneratorMove {
  enum class Kind { BlowUp, Stabilization };
  Kind kind;
  std::size_t position;  // 1-based pair (gamma_pos, gamma_pos+1), cyclic
  int parameter;         // blow-up exponent or stabilization k

  friend bool operator==(const GeneratorMove&, const GeneratorMove&) = default;
};

struct GeneratedDiagram {
  Diagram diagram;
  SumForm expected;  // closure left Unclosed; the base pair ((1,0),(0,1)) adds nothing
  std::vector<GeneratorMove> moves;
};

/// The closed base circuit ((1,0),(0,1)) on the torus.
Diagram generator_base();

/// Random genus-1 diagram built from the base by `steps` blow-ups (e = +-1)
/// and stabilizations (|k| <= 3) at uniform positions. Deterministic in seed.
GeneratedDiagram generate(std::uint64_t seed, std::size_t steps);

/// Replays recorded moves on the base circuit.
GeneratedDiagram replay(const std::vector<GeneratorMove>& moves);

}  // namespace sdcalc
