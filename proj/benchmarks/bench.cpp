#include <benchmark/benchmark.h>

#include <random>

#include "hyperclique/clique.hpp"
#include "hyperclique/extractor.hpp"
#include "hyperclique/forbidden.hpp"
#include "hyperclique/geometry.hpp"

using namespace hyperclique;

namespace {

Hypergraph random_hypergraph(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(p);
  std::vector<Subset> edges;
  for_each_combination(n, k, [&](std::span<const Vertex> s) {
    if (keep(rng)) edges.emplace_back(s.begin(), s.end());
  });
  return Hypergraph(n, k, std::move(edges));
}

void BM_MaxCliqueGraph(benchmark::State& state) {
  const auto g = random_hypergraph(static_cast<std::size_t>(state.range(0)), 2, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g));
}
BENCHMARK(BM_MaxCliqueGraph)->Arg(40)->Arg(80)->Arg(120);

void BM_MaxCliqueTriples(benchmark::State& state) {
  const auto h = random_hypergraph(static_cast<std::size_t>(state.range(0)), 3, 0.7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(h));
}
BENCHMARK(BM_MaxCliqueTriples)->Arg(12)->Arg(18)->Arg(24);

void BM_FindCompleteTuple(benchmark::State& state) {
  // Sparse missing edges keep the search from stopping at the first candidate.
  const auto h = random_hypergraph(static_cast<std::size_t>(state.range(0)), 3, 0.97, 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_complete_tuple(h, 3));
}
BENCHMARK(BM_FindCompleteTuple)->Arg(10)->Arg(14)->Arg(18);

void BM_ScoreTau(benchmark::State& state) {
  const auto strategy = static_cast<ScoreStrategy>(state.range(1));
  const auto h = random_hypergraph(static_cast<std::size_t>(state.range(0)), 3, 0.8, 4);
  const SubsetFamily family(h.n(), 4, enumerate_m_cliques(h, 4));
  for (auto _ : state) benchmark::DoNotOptimize(score_tau(h, family, strategy));
}
BENCHMARK(BM_ScoreTau)->ArgsProduct({{12, 18}, {1, 2}});

void BM_BuildNerve(benchmark::State& state) {
  const auto family = random_box_family(static_cast<std::size_t>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_nerve(family));
}
BENCHMARK(BM_BuildNerve)->Arg(50)->Arg(100)->Arg(200);

}  // namespace
BENCHMARK_MAIN();
