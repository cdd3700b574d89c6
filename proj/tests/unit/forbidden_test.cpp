#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hyperclique/errors.hpp"
#include "hyperclique/forbidden.hpp"
#include "oracles.hpp"

using namespace hyperclique;

namespace {

Hypergraph golden() { return Hypergraph::from_missing(9, 3, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}); }

Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& perm) {
  std::vector<Subset> edges;
  for (const auto& e : h.edges()) {
    Subset s;
    for (Vertex v : e) s.push_back(perm[v]);
    std::sort(s.begin(), s.end());
    edges.push_back(s);
  }
  return Hypergraph(h.n(), h.k(), edges);
}

}  // namespace

TEST(Verify, C4Certificate) {
  Hypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_TRUE(verify_complete_tuple(c4, {2, {{0, 2}, {1, 3}}}));
}

TEST(Verify, ReportsEachViolation) {
  Hypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto check = verify_complete_tuple(c4, {2, {{0, 1}, {2, 3}}});
  EXPECT_FALSE(check);
  EXPECT_EQ(check.violation, TupleViolation::not_missing);

  Hypergraph empty(4, 2);
  check = verify_complete_tuple(empty, {2, {{0, 1}, {1, 2}}});
  EXPECT_EQ(check.violation, TupleViolation::overlapping);

  Hypergraph path(4, 2, {{0, 1}, {1, 2}, {2, 3}});
  check = verify_complete_tuple(path, {2, {{0, 2}, {1, 3}}});
  EXPECT_EQ(check.violation, TupleViolation::transversal_not_clique);
  EXPECT_FALSE(check.detail.empty());
}

TEST(Verify, ShapeErrorsThrow) {
  Hypergraph g(6, 2);
  EXPECT_THROW(verify_complete_tuple(g, {2, {{0, 1}}}), ArgumentError);
  EXPECT_THROW(verify_complete_tuple(g, {1, {{0, 1}}}), ArgumentError);
  EXPECT_THROW(verify_complete_tuple(g, {2, {{0, 1}, {2, 3, 4}}}), ArgumentError);
}

TEST(Verify, AgreesWithTransversalOracle) {
  std::mt19937_64 rng(8);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const std::size_t m = k + (trial / 2) % 2;
    const std::size_t n = k * m + 1;
    const auto h = oracle::random_hypergraph(n, k, 0.85, rng);
    const auto e = oracle::edge_set(h);
    const auto miss = oracle::missing(n, k, e);
    if (miss.size() < m) continue;
    std::vector<Subset> tuples;
    std::sample(miss.begin(), miss.end(), std::back_inserter(tuples), m, rng);
    const bool expected = oracle::complete_tuple(e, k, tuples);
    positives += expected;
    EXPECT_EQ(static_cast<bool>(verify_complete_tuple(h, {m, tuples})), expected);
  }
  EXPECT_GT(positives, 0);
}

TEST(Find, GoldenInstance) {
  const auto r = find_complete_tuple(golden(), 3);
  ASSERT_EQ(r.verdict, SearchVerdict::found);
  EXPECT_EQ(r.certificate->tuples, (std::vector<Subset>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}));
}

TEST(Find, ExampleGraphs) {
  Hypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto r = find_complete_tuple(c4, 2);
  ASSERT_EQ(r.verdict, SearchVerdict::found);
  EXPECT_EQ(r.certificate->tuples, (std::vector<Subset>{{0, 2}, {1, 3}}));

  Hypergraph c5(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_EQ(find_complete_tuple(c5, 2).verdict, SearchVerdict::none);
  EXPECT_EQ(find_complete_tuple(Hypergraph::from_missing(5, 2, {}), 2).verdict, SearchVerdict::none);
}

TEST(Find, BudgetExhaustion) {
  // A dense instance with no 3-tuple in reach: one node is never enough.
  const auto h = golden();
  const auto r = find_complete_tuple(h, 3, 1);
  EXPECT_EQ(r.verdict, SearchVerdict::exhausted);
  EXPECT_FALSE(r.certificate);
}

TEST(Find, ExhaustiveEquivalenceSmallGraphs) {
  // Every graph on up to 6 vertices; oracle enumerates pairs of missing edges.
  for (std::size_t n = 4; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const auto g = oracle::graph_from_mask(n, mask);
      const bool expected = oracle::has_complete_tuple(n, 2, oracle::edge_set(g), 2);
      const auto r = find_complete_tuple(g, 2);
      ASSERT_NE(r.verdict, SearchVerdict::exhausted);
      ASSERT_EQ(r.verdict == SearchVerdict::found, expected) << "n=" << n << " mask=" << mask;
      if (expected) ASSERT_TRUE(verify_complete_tuple(g, *r.certificate));
    }
  }
}

TEST(Find, RandomHypergraphsAgainstOracle) {
  std::mt19937_64 rng(99);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const std::size_t m = k + (trial / 2) % 2;
    const std::size_t n = std::min<std::size_t>(k * m + trial % 3, 8);
    const auto h = oracle::random_hypergraph(n, k, 0.75 + 0.2 * (trial % 5) / 4.0, rng);
    const bool expected = oracle::has_complete_tuple(n, k, oracle::edge_set(h), m);
    const auto r = find_complete_tuple(h, m);
    ASSERT_NE(r.verdict, SearchVerdict::exhausted);
    EXPECT_EQ(r.verdict == SearchVerdict::found, expected) << "trial " << trial;
    if (r.certificate) {
      ++found;
      EXPECT_TRUE(oracle::complete_tuple(oracle::edge_set(h), k, r.certificate->tuples));
    }
  }
  EXPECT_GT(found, 10);
}

TEST(Find, VerdictInvariantUnderRelabeling) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const std::size_t m = k;
    const std::size_t n = 7;
    const auto h = oracle::random_hypergraph(n, k, 0.8, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = find_complete_tuple(h, m).verdict;
    const auto b = find_complete_tuple(relabel(h, perm), m).verdict;
    EXPECT_EQ(a, b) << "trial " << trial;
  }
}

TEST(Find, FirstCertificateIsLexicographic) {
  // Two disjoint induced C4s: the search walks missing edges in order.
  Hypergraph g(8, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
  const auto r = find_complete_tuple(g, 2);
  ASSERT_EQ(r.verdict, SearchVerdict::found);
  EXPECT_EQ(r.certificate->tuples, (std::vector<Subset>{{0, 2}, {1, 3}}));
}

TEST(Biclique, MatchesOracleOnAllSmallGraphs) {
  for (std::size_t n = 4; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); mask += 3) {
      const auto g = oracle::graph_from_mask(n, mask);
      ASSERT_EQ(has_induced_biclique(g, 2), oracle::has_complete_tuple(n, 2, oracle::edge_set(g), 2));
    }
  }
  Hypergraph octahedron = Hypergraph::from_missing(6, 2, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(has_induced_biclique(octahedron, 3));
  EXPECT_THROW(has_induced_biclique(Hypergraph(6, 3), 3), ArgumentError);
}

TEST(SearchVerdict, Names) {
  EXPECT_STREQ(to_string(SearchVerdict::found), "found");
  EXPECT_STREQ(to_string(SearchVerdict::none), "none");
  EXPECT_STREQ(to_string(SearchVerdict::exhausted), "exhausted");
}
