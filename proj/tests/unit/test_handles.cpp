#include <doctest.h>

#include "builders.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace sdcalc;
using build::h;

namespace {

void check_against_oracle(const IntMatrix& m) {
  const FormInvariants inv = form_invariants(m);
  const oracle::Inertia in = oracle::inertia(m);
  CHECK(inv.signature == in.positive - in.negative);
  CHECK(static_cast<long long>(inv.rank) == in.positive + in.negative);
  CHECK(in.positive + in.negative + in.zero == static_cast<long long>(m.rows()));
}

}  // namespace

TEST_CASE("fiber framing") {
  CHECK(fiber_framing(h({1, 0})) == 0);
  CHECK(fiber_framing(h({1, -1})) == -1);
  CHECK(fiber_framing(h({1, 1})) == 1);
  CHECK(fiber_framing(h({-1, 1})) == fiber_framing(h({1, -1})));
  CHECK_THROWS_AS(fiber_framing(h({0, 0})), PreconditionError);
}

TEST_CASE("linking numbers") {
  CHECK(linking(h({1, 0}), 1, h({0, 1}), 2) == 0);
  CHECK(linking(h({1, 1}), 1, h({1, 0}), 2) == 1);
  CHECK_THROWS_AS(linking(h({1, 0}), 1, h({0, 1}), 1), PreconditionError);

  rnd::Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const int g = static_cast<int>(rnd::uniform(rng, 1, 3));
    const HClass x = rnd::primitive(rng, g), y = rnd::primitive(rng, g);
    const std::size_t i = static_cast<std::size_t>(rnd::uniform(rng, 1, 5));
    std::size_t j = static_cast<std::size_t>(rnd::uniform(rng, 1, 5));
    if (i == j) ++j;
    CHECK(linking(x, i, y, j) == linking(y, j, x, i));
    CHECK(linking(-x, i, y, j) == -linking(x, i, y, j));
  }
}

TEST_CASE("linking matrices") {
  const LinkingMatrix m = linking_matrix(build::circuit({{1, 0}, {-1, 1}, {0, -1}}));
  CHECK(m.entries == build::matrix({{0, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
  CHECK(linking_matrix(build::circuit({{1, 0}, {0, 1}})).entries == IntMatrix(2, 2));
  CHECK_THROWS_AS(linking_matrix(build::circuit({{1, 0}, {1, 0}})), CircuitError);

  rnd::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const GeneratedDiagram g = generate(rng(), static_cast<std::size_t>(rnd::uniform(rng, 1, 8)));
    const LinkingMatrix l = linking_matrix(g.diagram.circuit());
    CHECK(l.entries.is_symmetric());
    for (std::size_t i = 0; i < l.size(); ++i) CHECK(l(i, i) == fiber_framing(g.diagram.circuit()[i]));
  }
}

TEST_CASE("form invariants") {
  FormInvariants inv = form_invariants(build::matrix({{0, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
  CHECK(inv == FormInvariants{1, -1, Parity::Odd});
  CHECK(form_invariants(IntMatrix(2, 2)) == FormInvariants{0, 0, Parity::Even});
  for (long long k = -4; k <= 4; ++k) {
    inv = form_invariants(build::matrix({{0, 1}, {1, -k}}));
    CHECK(inv.rank == 2);
    CHECK(inv.signature == 0);
  }

  rnd::Rng rng(47);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rnd::uniform(rng, 1, 7));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        // sparse, with zero diagonals common enough to hit hyperbolic blocks
        const long long v = rnd::uniform(rng, 0, 2) == 0 ? rnd::uniform(rng, -3, 3) : 0;
        m(i, j) = m(j, i) = v;
      }
    check_against_oracle(m);
  }
}

TEST_CASE("intersection form agrees with the oracle and with switching") {
  rnd::Rng rng(53);
  for (int t = 0; t < 100; ++t) {
    const GeneratedDiagram g = generate(rng(), static_cast<std::size_t>(rnd::uniform(rng, 1, 10)));
    const IntMatrix q = intersection_form(g.diagram.circuit());
    check_against_oracle(q);
    const FormInvariants inv = form_invariants(q);
    for (long long k : {1LL, 2LL, -1LL})
      CHECK(form_invariants(intersection_form(switch_diagram(g.diagram, k).circuit())) == inv);
    // flipping one curve conjugates the linking matrix by a diagonal sign
    const Circuit& c = g.diagram.circuit();
    const LinkingMatrix l = linking_matrix(c);
    const std::size_t f = static_cast<std::size_t>(rnd::uniform(rng, 0, static_cast<long long>(c.length()) - 1));
    for (std::size_t i = 0; i < c.length(); ++i)
      for (std::size_t j = 0; j < c.length(); ++j) {
        const HClass x = i == f ? -c[i] : c[i];
        const HClass y = j == f ? -c[j] : c[j];
        const Int raw = i == j ? fiber_framing(x) : linking(x, i + 1, y, j + 1);
        const int s = (i == f) != (j == f) ? -1 : 1;
        CHECK(raw == s * l(i, j));
      }
  }
}

TEST_CASE("Euler characteristics") {
  EulerCharacteristics e = euler_characteristics(build::circuit({{1, 0}, {0, 1}}));
  CHECK(e.total_space_over_disk == 2);
  CHECK(e.closed_manifold == 4);
  e = euler_characteristics(build::circuit({{1, 0}, {-1, 1}, {0, -1}}));
  CHECK(e.closed_manifold == 5);
  e = euler_characteristics(build::circuit({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(e.total_space_over_disk == 0);
  CHECK_FALSE(euler_characteristics(build::circuit({{1, 0}, {0, 1}}, false)).closed_manifold);
}

TEST_CASE("Kirby data") {
  const KirbyData k = emit_kirby(build::circuit({{1, 0}, {-1, 1}, {0, -1}}), Int(0));
  CHECK(k.one_handles == std::vector<std::string>{"a1", "b1"});
  CHECK(k.fiber_handle_framing == 0);
  REQUIRE(k.fold_handles.size() == 3);
  CHECK(k.fold_handles[0].framing == 0);
  CHECK(k.fold_handles[1].framing == -1);
  CHECK(k.fold_handles[2].framing == 0);
  CHECK(k.last_handle == Int(0));
  CHECK(k.handle_count() == 7);
  CHECK(!to_text(k).empty());

  const KirbyData two = emit_kirby(build::circuit({{1, 0}, {0, 1}}));
  CHECK(two.handle_count() == 5);
  CHECK_FALSE(two.last_handle);
  CHECK_THROWS_AS(emit_kirby(build::circuit({{1, 0}, {0, 1}}, false), Int(1)), PreconditionError);
}

TEST_CASE("broken Lefschetz data") {
  const BlfData b = to_blf(build::circuit({{1, 0}, {0, 1}}));
  REQUIRE(b.lefschetz_cycles.size() == 2);
  CHECK(b.lefschetz_cycles[0] == h({1, 1}));
  CHECK(b.round_cycle == h({1, 0}));
  CHECK(b.lefschetz_cycles[0] - b.round_cycle == h({0, 1}));
  CHECK_THROWS_AS(to_blf(build::circuit({{1, 0}, {0, 1}}, false)), PreconditionError);

  rnd::Rng rng(59);
  for (int t = 0; t < 50; ++t) {
    const GeneratedDiagram g = generate(rng(), static_cast<std::size_t>(rnd::uniform(rng, 0, 6)));
    const Circuit& c = g.diagram.circuit();
    const BlfData d = to_blf(c);
    CHECK(d.lefschetz_cycles.size() == c.length());
    CHECK(d.round_cycle == c[0]);
    // lambda_i slides back to gamma_{i+1} over gamma_i
    for (std::size_t i = 0; i + 1 < c.length(); ++i)
      CHECK(d.lefschetz_cycles[i] - pairing(c[i], c[i + 1]) * c[i] == c[i + 1]);
  }
}
