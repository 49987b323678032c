#include <benchmark/benchmark.h>

#include <random>

#include "sdcalc/sdcalc.hpp"

using namespace sdcalc;

namespace {

// Open chain a_1, b_1, a_2 - a_1, b_2, ..., a_g - a_{g-1}, b_g.
Circuit standard_chain(int g) {
  std::vector<HClass> out{HClass::a(g, 1), HClass::b(g, 1)};
  for (int i = 2; i <= g; ++i) {
    out.push_back(HClass::a(g, i) - HClass::a(g, i - 1));
    out.push_back(HClass::b(g, i));
  }
  return normalize(out, false);
}

void BM_Generate(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate(seed++, steps));
}
BENCHMARK(BM_Generate)->Arg(5)->Arg(15)->Arg(30);

void BM_Classify(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  std::vector<Diagram> ds;
  for (std::uint64_t s = 0; s < 32; ++s) ds.push_back(generate(s, steps).diagram);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(ds[i++ % ds.size()]));
}
BENCHMARK(BM_Classify)->Arg(5)->Arg(15)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_Detect(benchmark::State& state) {
  const Diagram d = generate(7, static_cast<std::size_t>(state.range(0))).diagram;
  for (auto _ : state) benchmark::DoNotOptimize(detect(d));
}
BENCHMARK(BM_Detect)->Arg(10)->Arg(30);

void BM_FormInvariants(benchmark::State& state) {
  const Diagram d = generate(11, static_cast<std::size_t>(state.range(0))).diagram;
  const IntMatrix q = intersection_form(d.circuit());
  for (auto _ : state) benchmark::DoNotOptimize(form_invariants(q));
  state.counters["rank"] = static_cast<double>(q.rows());
}
BENCHMARK(BM_FormInvariants)->Arg(10)->Arg(30)->Arg(60);

void BM_LinkingMatrix(benchmark::State& state) {
  const Diagram d = generate(13, static_cast<std::size_t>(state.range(0))).diagram;
  for (auto _ : state) benchmark::DoNotOptimize(linking_matrix(d.circuit()));
}
BENCHMARK(BM_LinkingMatrix)->Arg(10)->Arg(30);

void BM_MuTilde(benchmark::State& state) {
  const Circuit c = double_circuit(standard_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mu_tilde_matrix(c));
}
BENCHMARK(BM_MuTilde)->DenseRange(1, 4);

void BM_SurgeredAction(benchmark::State& state) {
  const Circuit c = double_circuit(standard_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(surgered_action(c));
}
BENCHMARK(BM_SurgeredAction)->DenseRange(1, 4);

void BM_TwistMatrixProduct(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<SpMatrix> ms;
  for (int i = 0; i < 16; ++i) {
    std::vector<Int> v(2 * static_cast<std::size_t>(g));
    for (Int& x : v) x = static_cast<long long>(rng() % 7) - 3;
    v[0] = 1;
    ms.push_back(twist_matrix(HClass(g, v), 1));
  }
  for (auto _ : state) {
    SpMatrix acc = SpMatrix::identity(g);
    for (const SpMatrix& m : ms) acc = acc * m;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_TwistMatrixProduct)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
