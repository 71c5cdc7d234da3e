#include <benchmark/benchmark.h>

#include <cstddef>

#include "jframe/krein.hpp"
#include "jframe/optimize.hpp"

namespace {

void BM_Minimize(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const jframe::KreinSpace space = jframe::make_space_from_signature(m, n);
  jframe::MinimizeConfig cfg;
  cfg.restarts = 2;
  cfg.seed = 7;
  for (auto _ : state) {
    auto r = jframe::minimize_potential(space, m + 1, n + 1, cfg);
    benchmark::DoNotOptimize(r.fp_j);
  }
}
BENCHMARK(BM_Minimize)->Args({2, 1})->Args({3, 2});

void BM_GenerateTight(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const jframe::KreinSpace space = jframe::make_space_from_signature(m, m);
  for (auto _ : state) {
    auto f = jframe::generate_tight_j_frame(space, 2 * m, 2 * m, 1);
    benchmark::DoNotOptimize(f.vectors.data());
  }
}
BENCHMARK(BM_GenerateTight)->Arg(2)->Arg(4);

}  // namespace
