#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperclique/density.hpp"
#include "hyperclique/forbidden.hpp"
#include "hyperclique/hypergraph.hpp"

namespace hyperclique {

struct FrontierRecord {
  std::size_t n = 0;
  std::size_t k = 2;
  std::size_t m = 2;
  std::uint64_t clique_count = 0;  // c_m
  std::uint64_t omega = 0;
  Density alpha;                   // c_m / C(n, m)
  Density omega_ratio;             // omega / n
  Hypergraph instance{0, 2};
  SearchVerdict verified = SearchVerdict::none;
  std::uint64_t search_nodes = 0;
};

/// Recomputes every field from `instance`. Throws ArgumentError unless the
/// complete-tuple search completes with `none`.
FrontierRecord make_frontier_record(const Hypergraph& instance, std::size_t m,
                                    std::uint64_t budget = kDefaultNodeBudget);

struct ExhaustiveConfig {
  std::size_t n = 0;
  std::size_t k = 2;
  std::size_t m = 2;
  std::uint64_t omega_cap = 0;
  std::size_t max_subsets = 21;  // refuse when C(n, k) exceeds this
  std::uint64_t budget = kDefaultNodeBudget;
  unsigned threads = 1;
};

struct ExhaustiveResult {
  std::uint64_t best_count = 0;
  std::optional<FrontierRecord> record;
  std::uint64_t instances = 0;
  std::uint64_t inconclusive = 0;  // instances dropped on an exhausted search
};

/// Every edge set on n vertices; keeps those with omega <= cap and no
/// complete m-tuple, maximizing c_m. Ties go to the lexicographically
/// smallest edge list.
ExhaustiveResult exhaustive_frontier(const ExhaustiveConfig& config);

struct HillClimbConfig {
  std::size_t n = 0;
  std::size_t k = 2;
  std::size_t m = 2;
  std::uint64_t omega_cap = 0;
  std::uint64_t iterations = 10'000;
  std::size_t restarts = 1;
  std::uint64_t seed = 0;
  double removal_probability = 0.1;
  std::uint64_t budget = 100'000;
  unsigned threads = 1;
};

/// Edge-toggle local search from the empty hypergraph. Restart r draws from
/// its own stream split off `seed`, so the result does not depend on
/// `threads`.
FrontierRecord hill_climb(const HillClimbConfig& config);

struct BetaUpperRow {
  std::size_t k = 2;
  std::size_t m = 2;
  Density alpha;
  Density min_omega_ratio;
  std::size_t records = 0;
  std::optional<double> theorem1;  // graphs with m = 2 only
  double beta_recursive = 0.0;
};

/// Smallest observed omega/n per (k, m, alpha). Throws ConsistencyError if a
/// row falls below a proven lower bound.
std::vector<BetaUpperRow> report_beta_upper(std::span<const FrontierRecord> records);

}  // namespace hyperclique
