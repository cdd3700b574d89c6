#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperclique/hypergraph.hpp"

namespace hyperclique {

struct CliqueWitness {
  Subset vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

/// Every k-subset of `s` (sorted) is an edge. Sets smaller than k qualify.
bool is_clique(const Hypergraph& h, std::span<const Vertex> s);

/// c_m(H). Throws ArgumentError for m < k.
std::uint64_t count_m_cliques(const Hypergraph& h, std::size_t m);

/// All m-cliques in lexicographic order. Throws SizeRefusal when C(n, m)
/// exceeds `limit`.
std::vector<Subset> enumerate_m_cliques(const Hypergraph& h, std::size_t m,
                                        std::uint64_t limit = kSaturated);

/// Exact maximum clique. Graphs go through a bitset branch-and-bound with a
/// greedy colouring bound; other arities use candidate-set filtering.
CliqueWitness max_clique(const Hypergraph& h);

/// Extends `seed` (which must be a clique) by scanning vertices in ascending
/// order and keeping each one that preserves the clique property.
CliqueWitness greedy_extend(const Hypergraph& h, std::span<const Vertex> seed);

}  // namespace hyperclique
