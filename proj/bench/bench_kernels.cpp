// Serial reference kernels against their OpenMP counterparts on synthetic
// curves of increasing length. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include "polyapprox/analysis.hpp"
#include "polyapprox/optimal.hpp"
#include "polyapprox/synthetic.hpp"

using namespace polyapprox;

namespace {

// Largest curve of a small synthetic batch, near the requested size.
const DigitalCurve& curve_near(std::size_t n) {
  static std::vector<std::pair<std::size_t, DigitalCurve>> cache;
  for (const auto& [key, c] : cache) {
    if (key == n) return c;
  }
  const auto corpus = synthetic_corpus(24, kDefaultCorpusSeed);
  const CorpusEntry* best = &corpus.front();
  for (const CorpusEntry& e : corpus) {
    const auto dist = [n](std::size_t s) { return s > n ? s - n : n - s; };
    if (dist(e.curve.size()) < dist(best->curve.size())) best = &e;
  }
  cache.emplace_back(n, best->curve);
  return cache.back().second;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_CostTable(benchmark::State& state) {
  const DigitalCurve& c = curve_near(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    SegmentCostTable table(c, exec_of(state));
    benchmark::DoNotOptimize(table.sum_sq(0, 1));
  }
  state.counters["n"] = static_cast<double>(c.size());
}

void BM_OptimalProfile(benchmark::State& state) {
  const DigitalCurve& c = curve_near(static_cast<std::size_t>(state.range(0)));
  const SegmentCostTable table(c, Execution::Serial);
  const std::size_t m_max = default_profile_m_max(c.size(), auto_target_m(c.size(), 15.0));
  for (auto _ : state) {
    OptimalSolver solver(table, 0, m_max, CostKind::SumSquared, exec_of(state));
    benchmark::DoNotOptimize(solver.profile().at(3));
  }
  state.counters["n"] = static_cast<double>(c.size());
  state.counters["m_max"] = static_cast<double>(m_max);
}

void BM_Study(benchmark::State& state) {
  const auto corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)), kDefaultCorpusSeed);
  const std::vector<SchemeId> schemes{SchemeId::EliminateToM};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_study(corpus, schemes));
  }
}

}  // namespace

BENCHMARK(BM_CostTable)
    ->ArgsProduct({{200, 400, 650}, {0, 1}})
    ->ArgNames({"n", "parallel"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimalProfile)
    ->ArgsProduct({{200, 400, 650}, {0, 1}})
    ->ArgNames({"n", "parallel"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Study)->Arg(6)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
