#include <gtest/gtest.h>

#include "hyperclique/bounds.hpp"
#include "hyperclique/clique.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/search.hpp"
#include "oracles.hpp"

using namespace hyperclique;

namespace {

// C5 up to relabeling: 2-regular and connected on five vertices.
bool is_five_cycle(const Hypergraph& g) {
  if (g.n() != 5 || g.edge_count() != 5) return false;
  for (Vertex v = 0; v < 5; ++v)
    if (neighborhood(g, v).size() != 2) return false;
  std::vector<bool> seen(5, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : neighborhood(g, v))
      if (!seen[u]) seen[u] = stack.emplace_back(u), true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Largest edge count over graphs on n vertices with omega <= cap and no induced C4.
std::size_t frontier_oracle(std::size_t n, std::size_t cap) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const auto g = oracle::graph_from_mask(n, mask);
    const auto e = oracle::edge_set(g);
    if (e.size() <= best || oracle::omega(n, 2, e) > cap) continue;
    if (!oracle::has_complete_tuple(n, 2, e, 2)) best = e.size();
  }
  return best;
}

}  // namespace

TEST(FrontierRecord, FieldsFromInstance) {
  Hypergraph c5(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto r = make_frontier_record(c5, 2);
  EXPECT_EQ(r.clique_count, 5u);
  EXPECT_EQ(r.omega, 2u);
  EXPECT_EQ(r.alpha, Density(1, 2));
  EXPECT_EQ(r.omega_ratio, Density(2, 5));
  EXPECT_EQ(r.verified, SearchVerdict::none);
  Hypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_THROW(make_frontier_record(c4, 2), ArgumentError);
}

TEST(Exhaustive, FrontierMatchesOracle) {
  // Oracle values, computed by brute force over every graph.
  EXPECT_EQ(frontier_oracle(4, 2), 3u);
  EXPECT_EQ(frontier_oracle(5, 2), 5u);
  EXPECT_EQ(frontier_oracle(5, 3), 7u);
  for (auto [n, cap, expected] : {std::tuple{4u, 2u, 3u}, {5u, 2u, 5u}, {5u, 3u, 7u}}) {
    ExhaustiveConfig cfg;
    cfg.n = n;
    cfg.omega_cap = cap;
    const auto r = exhaustive_frontier(cfg);
    EXPECT_EQ(r.best_count, expected);
    ASSERT_TRUE(r.record);
    EXPECT_EQ(r.record->clique_count, expected);
    EXPECT_LE(r.record->omega, cap);
    EXPECT_EQ(r.inconclusive, 0u);
    EXPECT_EQ(r.instances, std::uint64_t{1} << (n * (n - 1) / 2));
  }
}

TEST(Exhaustive, FiveVertexWitnessIsCycle) {
  ExhaustiveConfig cfg;
  cfg.n = 5;
  cfg.omega_cap = 2;
  const auto r = exhaustive_frontier(cfg);
  ASSERT_TRUE(r.record);
  EXPECT_TRUE(is_five_cycle(r.record->instance));
}

TEST(Exhaustive, ThreadCountDoesNotChangeResult) {
  ExhaustiveConfig cfg;
  cfg.n = 5;
  cfg.omega_cap = 3;
  const auto one = exhaustive_frontier(cfg);
  cfg.threads = 4;
  const auto four = exhaustive_frontier(cfg);
  EXPECT_EQ(one.best_count, four.best_count);
  EXPECT_EQ(one.record->instance, four.record->instance);
}

TEST(Exhaustive, RefusesLargeSpaces) {
  ExhaustiveConfig cfg;
  cfg.n = 8;
  cfg.omega_cap = 3;
  EXPECT_THROW(exhaustive_frontier(cfg), SizeRefusal);
}

TEST(HillClimb, ReachesFiveVertexOptimum) {
  HillClimbConfig cfg;
  cfg.n = 5;
  cfg.omega_cap = 2;
  cfg.seed = 1;
  const auto r = hill_climb(cfg);
  EXPECT_EQ(r.clique_count, 5u);
  EXPECT_TRUE(is_five_cycle(r.instance));
}

TEST(HillClimb, DeterministicAndThreadIndependent) {
  HillClimbConfig cfg;
  cfg.n = 7;
  cfg.omega_cap = 3;
  cfg.seed = 9;
  cfg.iterations = 2000;
  cfg.restarts = 3;
  const auto a = hill_climb(cfg);
  cfg.threads = 3;
  const auto b = hill_climb(cfg);
  EXPECT_EQ(a.instance, b.instance);
  EXPECT_EQ(a.clique_count, b.clique_count);
}

TEST(HillClimb, RecordsAreValid) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    HillClimbConfig cfg;
    cfg.n = 6;
    cfg.k = 3;
    cfg.m = 3;
    cfg.omega_cap = 4;
    cfg.iterations = 500;
    cfg.seed = seed;
    const auto r = hill_climb(cfg);
    const auto e = oracle::edge_set(r.instance);
    EXPECT_LE(oracle::omega(6, 3, e), 4u);
    EXPECT_EQ(r.omega, oracle::omega(6, 3, e));
    EXPECT_FALSE(oracle::has_complete_tuple(6, 3, e, 3));
  }
}

TEST(BetaUpper, GroupsAndKeepsMinimum) {
  Hypergraph c5(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  Hypergraph matching(4, 2, {{0, 1}, {2, 3}});
  const std::vector<FrontierRecord> records{make_frontier_record(c5, 2), make_frontier_record(c5, 2),
                                            make_frontier_record(matching, 2)};
  const auto rows = report_beta_upper(records);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    ASSERT_TRUE(row.theorem1);
    EXPECT_GE(row.min_omega_ratio.value(), *row.theorem1);
  }
  const auto& c5_row = rows[0].alpha == Density(1, 2) ? rows[0] : rows[1];
  EXPECT_EQ(c5_row.records, 2u);
  EXPECT_EQ(c5_row.min_omega_ratio, Density(2, 5));
}
