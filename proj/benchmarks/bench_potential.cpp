#include <benchmark/benchmark.h>

#include <cstddef>

#include "jframe/frame.hpp"
#include "jframe/krein.hpp"
#include "jframe/optimize.hpp"
#include "jframe/potential.hpp"

namespace {

jframe::FrameFamily fixture(std::size_t m, std::size_t n, std::size_t p,
                            std::size_t q) {
  const jframe::KreinSpace space = jframe::make_space_from_signature(m, n);
  return jframe::generate_tight_j_frame(space, p, q, 42);
}

void BM_FramePotential(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const jframe::FrameFamily f = fixture(s, s, 2 * s, 2 * s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jframe::frame_potential(f));
  }
}
BENCHMARK(BM_FramePotential)->Arg(2)->Arg(4)->Arg(8);

void BM_PotentialGradient(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const jframe::FrameFamily f = fixture(s, s, 2 * s, 2 * s);
  for (auto _ : state) {
    auto grad = jframe::potential_gradient(f);
    benchmark::DoNotOptimize(grad.data());
  }
}
BENCHMARK(BM_PotentialGradient)->Arg(2)->Arg(4);

void BM_Zeta(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const jframe::FrameFamily f = fixture(s, s, 2 * s, 2 * s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jframe::compute_zeta(f));
  }
}
BENCHMARK(BM_Zeta)->Arg(2)->Arg(4);

void BM_Analyze(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const jframe::FrameFamily f = fixture(s, s, 2 * s, 2 * s);
  for (auto _ : state) {
    jframe::FrameAnalysis a = jframe::analyze(f);
    benchmark::DoNotOptimize(a.is_j_frame);
  }
}
BENCHMARK(BM_Analyze)->Arg(2)->Arg(4);

}  // namespace
