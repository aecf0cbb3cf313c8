#include "mtfl/norms.hpp"
#include "mtfl/projections.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

mtfl::Matrix random_matrix(mtfl::Index rows, mtfl::Index cols,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  mtfl::Matrix m(rows, cols);
  for (mtfl::Index r = 0; r < rows; ++r) {
    for (mtfl::Index c = 0; c < cols; ++c) {
      m(r, c) = dist(rng);
    }
  }
  return m;
}

void BM_ProjectOntoL21Ball(benchmark::State& state) {
  const mtfl::Index n = state.range(0);
  const mtfl::Matrix u = random_matrix(n, 10, 7);
  const mtfl::L21Ball ball{0.3 * mtfl::l21_norm(u)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtfl::project_onto_l21_ball(u, ball));
  }
  state.SetItemsProcessed(state.iterations() * n * 10);
}
BENCHMARK(BM_ProjectOntoL21Ball)->RangeMultiplier(10)->Range(10000, 1000000);

void BM_ProjectOntoCones(benchmark::State& state) {
  const mtfl::Index n = state.range(0);
  const mtfl::Matrix u = random_matrix(n, 10, 11);
  const mtfl::Vector v = random_matrix(n, 1, 13).col(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtfl::project_onto_cones(v, u));
  }
  state.SetItemsProcessed(state.iterations() * n * 10);
}
BENCHMARK(BM_ProjectOntoCones)->RangeMultiplier(10)->Range(10000, 1000000);

void BM_FindDualLambda(benchmark::State& state) {
  const mtfl::Index n = state.range(0);
  const mtfl::Vector norms = random_matrix(n, 1, 17).col(0).cwiseAbs();
  const double z = 0.3 * norms.sum();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtfl::find_dual_lambda(norms, z, 1e-10));
  }
}
BENCHMARK(BM_FindDualLambda)->RangeMultiplier(10)->Range(10000, 1000000);

void BM_FindDualLambdaSorted(benchmark::State& state) {
  const mtfl::Index n = state.range(0);
  const mtfl::Vector norms = random_matrix(n, 1, 17).col(0).cwiseAbs();
  const double z = 0.3 * norms.sum();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtfl::find_dual_lambda_sorted(norms, z, 1e-10));
  }
}
BENCHMARK(BM_FindDualLambdaSorted)->RangeMultiplier(10)->Range(10000, 1000000);

}  // namespace

BENCHMARK_MAIN();
