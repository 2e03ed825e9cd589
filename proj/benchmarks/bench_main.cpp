#include <benchmark/benchmark.h>

#include <random>

#include "orbitseq/complexes.hpp"
#include "orbitseq/equivariant.hpp"
#include "orbitseq/exactla.hpp"
#include "orbitseq/fixtures.hpp"
#include "orbitseq/gysin.hpp"
#include "orbitseq/lesolve.hpp"
#include "orbitseq/models.hpp"

namespace {

using namespace orbitseq;

exactla::Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  exactla::Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(exactla::rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 64);

void BM_SphereCohomology(benchmark::State& state) {
  const auto x = models::sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(complexes::cohomology(x));
  state.counters["simplices"] = static_cast<double>(x.size());
}
BENCHMARK(BM_SphereCohomology)->DenseRange(1, 5);

void BM_IcosahedronSplit(benchmark::State& state) {
  const equivariant::Involution a(models::icosahedron(), models::icosahedron_antipodal_pairs());
  for (auto _ : state) benchmark::DoNotOptimize(equivariant::split_involution(a));
}
BENCHMARK(BM_IcosahedronSplit);

void BM_PairSequence(benchmark::State& state) {
  const complexes::SimplicialPair p(models::torus(), models::polygon(3));
  for (auto _ : state) benchmark::DoNotOptimize(complexes::pair_long_exact_sequence(p));
}
BENCHMARK(BM_PairSequence);

void BM_SolveDims(benchmark::State& state) {
  // 0, ?, 1, ?, 1, ?, ... , 0: alternating unknowns with all-one neighbours.
  std::vector<lesolve::Slot> slots{lesolve::Slot::zero()};
  for (int i = 0; i < state.range(0); ++i) {
    slots.push_back({"u" + std::to_string(i), std::nullopt, std::nullopt});
    slots.push_back({"k" + std::to_string(i), 1, std::nullopt});
  }
  slots.push_back({"last", std::nullopt, std::nullopt});
  slots.push_back(lesolve::Slot::zero());
  const lesolve::ExactSequenceTemplate t(slots);
  for (auto _ : state) benchmark::DoNotOptimize(lesolve::solve_dims(t));
}
BENCHMARK(BM_SolveDims)->DenseRange(2, 10, 4);

void BM_AssembleFixture(benchmark::State& state) {
  const auto& names = fixtures::names();
  const auto g = fixtures::fixture(names[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(gysin::assemble(g));
  state.SetLabel(names[static_cast<std::size_t>(state.range(0))]);
}
BENCHMARK(BM_AssembleFixture)->DenseRange(0, 6);

}  // namespace

BENCHMARK_MAIN();
