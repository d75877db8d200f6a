#include <benchmark/benchmark.h>

#include "qmdp/buchi_cobuchi.hpp"
#include "qmdp/mec.hpp"
#include "qmdp/random.hpp"
#include "qmdp/reach.hpp"
#include "qmdp/reductions.hpp"
#include "qmdp/streett.hpp"

using namespace qmdp;

namespace {

std::vector<VertexSet> random_targets(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet t(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.chance(p)) t.insert(v);
    if (t.empty()) t.insert(static_cast<Vertex>(rng.below(n)));
    out.push_back(std::move(t));
  }
  return out;
}

const RandomMdpOptions kClustered{0.5, 100, 0.1};

// Fresh Mdp per iteration so the cached MEC decomposition is part of the cost.
void BM_ReachDisjQuery(benchmark::State& state) {
  const std::size_t n = 20000, k = static_cast<std::size_t>(state.range(0));
  const auto targets = random_targets(n, k, 0.001, 3);
  for (auto _ : state) {
    state.PauseTiming();
    const Mdp mdp = random_mdp(n, 4 * n, 1, kClustered);
    state.ResumeTiming();
    benchmark::DoNotOptimize(as_reach_disj_query(mdp, targets));
  }
  state.counters["k"] = static_cast<double>(k);
}
BENCHMARK(BM_ReachDisjQuery)->RangeMultiplier(2)->Range(1, 64)->Unit(benchmark::kMillisecond);

void BM_MecDecomposition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mdp mdp = random_mdp(n, 4 * n, 2, kClustered);
  for (auto _ : state) benchmark::DoNotOptimize(mec_decomposition(MdpView(mdp)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MecDecomposition)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Streett(benchmark::State& state) {
  const auto algo = static_cast<StreettAlgo>(state.range(0));
  const std::size_t n = static_cast<std::size_t>(state.range(1)), k = 16;
  const Mdp mdp = random_mdp(n, 4 * n, 5, RandomMdpOptions{0.3, 20, 0.1});
  const auto ls = random_targets(n, k, 0.1, 6), us = random_targets(n, k, 0.05, 7);
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < k; ++i) pairs.push_back({ls[i], us[i]});
  for (auto _ : state) benchmark::DoNotOptimize(streett_good_union(mdp, pairs, algo));
  state.SetLabel(std::string(to_string(algo)));
}
BENCHMARK(BM_Streett)
    ->ArgsProduct({{static_cast<int>(StreettAlgo::Basic), static_cast<int>(StreettAlgo::Impr),
                    static_cast<int>(StreettAlgo::Dense), static_cast<int>(StreettAlgo::Sparse)},
                   {1000, 4000}})
    ->Unit(benchmark::kMillisecond);

void BM_CoBuchiSingleton(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0)), k = 8;
  const Mdp g = random_strongly_connected_graph(n, 3 * n, 8);
  Rng rng(9);
  std::vector<VertexSet> targets;
  for (std::size_t i = 0; i < k; ++i) targets.push_back(VertexSet(n, {static_cast<Vertex>(rng.below(n))}));
  const bool singleton = state.range(1) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(singleton ? as_cobuchi_singleton_graph(g, targets) : as_cobuchi_disj_objective(g, targets));
  state.SetLabel(singleton ? "singleton" : "general");
}
BENCHMARK(BM_CoBuchiSingleton)->ArgsProduct({{1000, 10000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_TriangleReachGenerate(benchmark::State& state) {
  const SourceGraph g = random_source_graph(static_cast<std::size_t>(state.range(0)), 0.05, 10);
  for (auto _ : state) benchmark::DoNotOptimize(gen_triangle_reach(g));
}
BENCHMARK(BM_TriangleReachGenerate)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
