#include <doctest.h>

#include "builders.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace sdcalc;
using build::h;

namespace {

std::vector<Circuit> sample_circuits(std::uint64_t seed, std::size_t count) {
  rnd::Rng rng(seed);
  std::vector<Circuit> out;
  while (out.size() < count) {
    const int g = static_cast<int>(rnd::uniform(rng, 1, 3));
    if (g == 1) {
      out.push_back(generate(rng(), static_cast<std::size_t>(rnd::uniform(rng, 0, 6))).diagram.circuit());
      continue;
    }
    if (auto c = rnd::closed_circuit(rng, g, static_cast<std::size_t>(rnd::uniform(rng, 2, 7)))) out.push_back(*c);
  }
  return out;
}

}  // namespace

TEST_CASE("lift words") {
  const Circuit ab = build::circuit({{1, 0}, {0, 1}});
  const TwistWord w = mu_tilde_word(ab);
  REQUIRE(w.size() == 2);
  CHECK(same_curve(w.factors()[1].axis, h({1, 1})));
  CHECK(same_curve(w.factors()[0].axis, h({1, -1})));
  CHECK(mu_tilde_matrix(ab) * h({1, 0}) == h({-1, 0}));

  const TwistWord w3 = mu_tilde_word(build::circuit({{1, 0}, {-1, 1}, {0, -1}}));
  REQUIRE(w3.size() == 3);
  CHECK(same_curve(w3.factors().back().axis, h({0, 1})));

  const SpMatrix m = mu_tilde_matrix(build::circuit({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(m * HClass::a(2, 2) == HClass::a(2, 2));
  CHECK(m * HClass::b(2, 2) == HClass::b(2, 2));

  CHECK_THROWS_AS(mu_tilde_word(build::circuit({{1, 0}, {0, 1}}, false)), PreconditionError);
  const Diagram twisted(ab, twist_matrix(h({1, 0}), 1));
  CHECK_THROWS_AS(mu_tilde_word(twisted), PreconditionError);
}

TEST_CASE("eigenvector law and factorwise law") {
  for (const Circuit& c : sample_circuits(79, 150)) {
    const TwistWord w = mu_tilde_word(c);
    CHECK(w.size() == c.length());
    const Int eps = c.closing_pairing();
    const Int sgn = (c.length() % 2 == 0 ? 1 : -1) * eps;
    CHECK(mu_tilde_matrix(c) * c[0] == sgn * c[0]);
    const std::size_t n = c.length();
    for (std::size_t i = 0; i < n; ++i) {
      const Twist& f = w.factors()[n - 1 - i];
      const HClass next = i + 1 < n ? c[i + 1] : c[0];
      CHECK(same_curve(twist(f.axis, 1, c[i]), next));
    }
  }
}

TEST_CASE("surgered action") {
  const SurgeredAction g1 = surgered_action(build::circuit({{1, 0}, {0, 1}}));
  CHECK(g1.quotient_rank == 0);
  CHECK(verdict(g1).not_obstructed);

  const SurgeredAction g2 = surgered_action(build::circuit({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(g2.quotient_rank == 2);
  CHECK(g2.matrix.is_identity());
  REQUIRE(g2.basis.size() == 2);
  CHECK(same_curve(g2.basis[0], HClass::a(2, 2)) + same_curve(g2.basis[0], HClass::b(2, 2)) == 1);

  const Circuit w = build::circuit({{0, 1, 0, 0}, {-1, 1, 0, -1}, {-1, 0, 0, 0}});
  REQUIRE(validate(w).ok);
  const Verdict v = verdict(w);
  CHECK_FALSE(v.not_obstructed);
  CHECK(v.witness);
  CHECK(v.text().find("obstructed") != std::string::npos);
  CHECK(verdict(g2).text() == "not obstructed on homology");
}

TEST_CASE("surgered action agrees with the rational oracle and keeps the pairing") {
  rnd::Rng rng(83);
  for (const Circuit& c : sample_circuits(83, 120)) {
    const SurgeredAction a = surgered_action(c);
    CHECK(a.quotient_rank == 2 * static_cast<std::size_t>(c.genus()) - 2);
    for (const HClass& b : a.basis) CHECK(pairing(c[0], b) == 0);
    CHECK(oracle::action_consistent(mu_tilde_matrix(c), a));
    CHECK(oracle::spans_complement(a, rnd::dual(rng, c[0])));
    const IntMatrix gram = quotient_pairing(a);
    CHECK(a.matrix.transpose() * gram * a.matrix == gram);
  }
}

TEST_CASE("kernel laws") {
  rnd::Rng rng(89);
  for (int t = 0; t < 100; ++t) {
    const int g = static_cast<int>(rnd::uniform(rng, 1, 4));
    const HClass a = rnd::primitive(rng, g);
    const HClass x = rnd::dual(rng, a);
    CHECK(surgered_action_of(twist_matrix(a, rnd::uniform(rng, -3, 3)), a).matrix.is_identity());
    CHECK(surgered_action_of(delta_twist(a, x), a).matrix.is_identity());
  }
}

TEST_CASE("alternative lifts give the same surgered action") {
  for (const Circuit& c : sample_circuits(97, 80)) {
    const SurgeredAction ref = surgered_action(c);
    for (const TwistWord& w : alternative_lifts(c)) {
      const SpMatrix m = w.matrix();
      CHECK(surgered_action_of(m, c[0]).matrix == ref.matrix);
    }
  }
}

TEST_CASE("doubles are not obstructed") {
  rnd::Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    const int g = static_cast<int>(rnd::uniform(rng, 1, 3));
    const Circuit open(rnd::chain(rng, g, static_cast<std::size_t>(rnd::uniform(rng, 2, 6))), false);
    CHECK(verdict(double_circuit(open)).not_obstructed);
  }
}
