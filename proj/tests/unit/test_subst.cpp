#include <doctest.h>

#include "builders.hpp"
#include "random.hpp"

using namespace sdcalc;
using build::h;

TEST_CASE("blow-up substitution") {
  const Diagram ab = build::diagram({{1, 0}, {0, 1}});
  const Diagram d = apply_blowup(ab, 1, 1);
  CHECK(d.circuit() == build::circuit({{1, 0}, {-1, 1}, {0, -1}}));
  CHECK(fiber_framing(d.circuit()[1]) == -1);
  CHECK(fiber_framing(apply_blowup(ab, 1, -1).circuit()[1]) == 1);
  CHECK_THROWS_AS(apply_blowup(ab, 3, 1), PreconditionError);
  CHECK_THROWS_AS(apply_blowup(ab, 0, 1), PreconditionError);
  CHECK_THROWS_AS(apply_blowup(ab, 1, 2), PreconditionError);
  CHECK_THROWS_AS(apply_blowup(build::diagram({{1, 0}, {0, 1}}, false), 1, 1), PreconditionError);
}

TEST_CASE("stabilization and Hayano surgery") {
  const Diagram ab = build::diagram({{1, 0}, {0, 1}});
  const Circuit expected = build::circuit({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(apply_stabilization(ab, 1, 0).circuit() == expected);

  const SurgeryResult s = hayano_surgery(ab, 1, h({0, 1}), 0);
  CHECK(s.diagram.circuit() == expected);
  CHECK(s.framing == SurgeryFraming::Fiber);
  CHECK(hayano_surgery(ab, 1, h({0, 1}), -1).framing == SurgeryFraming::Opposite);
  CHECK(std::string(to_string(SurgeryFraming::Opposite)) == "opposite framing");
  CHECK(hayano_surgery(ab, 2, h({1, 0}), 3).diagram.length() == 4);
  CHECK_THROWS_AS(hayano_surgery(ab, 1, h({1, 0}), 0), PreconditionError);
}

TEST_CASE("length laws and validity") {
  rnd::Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const GeneratedDiagram g = generate(rng(), static_cast<std::size_t>(rnd::uniform(rng, 0, 8)));
    const std::size_t c = g.diagram.length();
    const std::size_t pos = static_cast<std::size_t>(rnd::uniform(rng, 1, static_cast<long long>(c)));
    const Diagram b = apply_blowup(g.diagram, pos, rnd::uniform(rng, 0, 1) ? 1 : -1);
    CHECK(b.length() == c + 1);
    CHECK(validate(b).ok);
    const Diagram s = apply_stabilization(g.diagram, pos, rnd::uniform(rng, -3, 3));
    CHECK(s.length() == c + 2);
    CHECK(validate(s).ok);
  }
}

TEST_CASE("detection examples") {
  std::vector<Detection> found = detect(build::diagram({{1, 0}, {-1, 1}, {0, -1}}));
  REQUIRE(!found.empty());
  const auto* b = std::get_if<BlowUpPattern>(&found.front().kind);
  REQUIRE(b != nullptr);
  CHECK(b->exponent == 1);
  CHECK(b->summand == Summand::CP2Bar);
  CHECK(b->middle_framing == -1);
  CHECK(found.front().position == 1);
  CHECK(found.front().exactness == Exactness::Exact);
  // every cyclic triple of a length-3 torus circuit is a blow-up
  for (const Detection& d : found) CHECK(d.is_blowup());

  found = detect(build::diagram({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  bool stab = false;
  for (const Detection& d : found)
    if (const auto* s = std::get_if<StabilizationPattern>(&d.kind))
      stab = stab || (s->k == 0 && s->summand == Summand::S2xS2);
  CHECK(stab);

  CHECK(detect(build::diagram({{1, 0}, {0, 1}})).empty());

  found = detect(Diagram(apply_blowup(Diagram(build::circuit({{1, 0, 0, 0}, {0, 1, 0, 0}})), 1, 1)));
  REQUIRE(!found.empty());
  CHECK(found.front().exactness == Exactness::HomologicalOnly);
}

TEST_CASE("detections are ascending and the stabilization k is recovered") {
  rnd::Rng rng(67);
  for (int t = 0; t < 200; ++t) {
    const GeneratedDiagram g = generate(rng(), static_cast<std::size_t>(rnd::uniform(rng, 0, 6)));
    const std::size_t pos = static_cast<std::size_t>(rnd::uniform(rng, 1, static_cast<long long>(g.diagram.length())));
    const long long k = rnd::uniform(rng, -3, 3);
    const Diagram s = apply_stabilization(g.diagram, pos, k);
    const std::vector<Detection> found = detect(s);
    for (std::size_t i = 1; i < found.size(); ++i) CHECK(found[i - 1].position <= found[i].position);
    bool hit = false;
    for (const Detection& d : found)
      if (const auto* st = std::get_if<StabilizationPattern>(&d.kind))
        hit = hit || (d.position == pos && st->k == k);
    CHECK(hit);
  }
}

TEST_CASE("contraction undoes substitutions") {
  rnd::Rng rng(71);
  for (int t = 0; t < 300; ++t) {
    const GeneratedDiagram g = generate(rng(), static_cast<std::size_t>(rnd::uniform(rng, 0, 8)));
    const std::size_t c = g.diagram.length();
    const std::size_t pos = static_cast<std::size_t>(rnd::uniform(rng, 1, static_cast<long long>(c)));
    const bool blow = rnd::uniform(rng, 0, 1) == 1;
    const int e = rnd::uniform(rng, 0, 1) ? 1 : -1;
    const long long k = rnd::uniform(rng, -3, 3);
    const Diagram d = blow ? apply_blowup(g.diagram, pos, e) : apply_stabilization(g.diagram, pos, k);
    bool undone = false;
    for (const Detection& det : detect(d)) {
      if (det.position != pos || det.is_blowup() != blow || det.is_hayano()) continue;
      const Contraction back = contract(d, det);
      CHECK(back.diagram == g.diagram);
      if (blow) CHECK(back.delta == delta_of(e == 1 ? Summand::CP2Bar : Summand::CP2));
      else CHECK(back.delta == delta_of(k % 2 == 0 ? Summand::S2xS2 : Summand::CP2SumCP2Bar));
      undone = true;
    }
    CHECK(undone);
  }
}

TEST_CASE("contract rejects stale detections") {
  const Diagram d = build::diagram({{1, 0}, {-1, 1}, {0, -1}});
  const Detection det = detect(d).front();
  const Diagram other = build::diagram({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK_THROWS_AS(contract(other, det), PreconditionError);
  const Contraction r = contract(d, det);
  CHECK(r.diagram.length() == 2);
  CHECK(pairing(r.diagram.circuit()[0], r.diagram.circuit()[1]) == 1);
  CHECK(r.delta.n == 1);
}
