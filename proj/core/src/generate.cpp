#include "sdcalc/generate.hpp"

#include <random>

#include "sdcalc/subst.hpp"

namespace sdcalc {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling keeps the result identical across standard libraries
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do r = rng(); while (r >= limit);
  return r % n;
}

Summand summand_of(const GeneratorMove& m) {
  if (m.kind == GeneratorMove::Kind::BlowUp) return m.parameter == 1 ? Summand::CP2Bar : Summand::CP2;
  return m.parameter % 2 == 0 ? Summand::S2xS2 : Summand::CP2SumCP2Bar;
}

Diagram apply_move(const Diagram& d, const GeneratorMove& m) {
  if (m.kind == GeneratorMove::Kind::BlowUp) return apply_blowup(d, m.position, m.parameter);
  return apply_stabilization(d, m.position, m.parameter);
}

}  // namespace

Diagram generator_base() {
  return Diagram(Circuit({HClass::a(1, 1), HClass::b(1, 1)}, true));
}

GeneratedDiagram generate(std::uint64_t seed, std::size_t steps) {
  std::mt19937_64 rng(seed);
  GeneratedDiagram g{generator_base(), SumForm{}, {}};
  for (std::size_t s = 0; s < steps; ++s) {
    GeneratorMove m{};
    m.position = 1 + uniform_below(rng, g.diagram.length());
    if (uniform_below(rng, 2) == 0) {
      m.kind = GeneratorMove::Kind::BlowUp;
      m.parameter = uniform_below(rng, 2) == 0 ? 1 : -1;
    } else {
      m.kind = GeneratorMove::Kind::Stabilization;
      m.parameter = static_cast<int>(uniform_below(rng, 7)) - 3;
    }
    g.diagram = apply_move(g.diagram, m);
    g.expected.add(summand_of(m));
    g.moves.push_back(m);
  }
  return g;
}

GeneratedDiagram replay(const std::vector<GeneratorMove>& moves) {
  GeneratedDiagram g{generator_base(), SumForm{}, moves};
  for (const GeneratorMove& m : moves) {
    g.diagram = apply_move(g.diagram, m);
    g.expected.add(summand_of(m));
  }
  return g;
}

}  // namespace sdcalc
