#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "jframe/numerics.hpp"
#include "jframe/rng.hpp"

namespace {

jframe::num::Matrix random_symmetric(std::size_t n, std::uint64_t seed) {
  jframe::rng::SplitMix64 gen(seed);
  jframe::num::Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = gen.gaussian();
      a(i, j) = v;
      a(j, i) = v;
    }
  return a;
}

void BM_SymEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const jframe::num::Matrix a = random_symmetric(n, 0x5eed + n);
  for (auto _ : state) {
    auto eig = jframe::num::sym_eig(a);
    benchmark::DoNotOptimize(eig.values.data());
  }
}
BENCHMARK(BM_SymEig)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SingularValues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  jframe::rng::SplitMix64 gen(0xabcd + n);
  jframe::num::Matrix a(n, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n + 2; ++j) a(i, j) = gen.gaussian();
  for (auto _ : state) {
    auto sv = jframe::num::singular_values(a);
    benchmark::DoNotOptimize(sv.data());
  }
}
BENCHMARK(BM_SingularValues)->Arg(4)->Arg(8)->Arg(16);

void BM_MatMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const jframe::num::Matrix a = random_symmetric(n, 11);
  const jframe::num::Matrix b = random_symmetric(n, 12);
  for (auto _ : state) {
    jframe::num::Matrix c = a * b;
    benchmark::DoNotOptimize(c.data().data());
  }
}
BENCHMARK(BM_MatMul)->Arg(8)->Arg(32);

}  // namespace
