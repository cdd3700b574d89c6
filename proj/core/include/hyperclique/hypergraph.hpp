#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "hyperclique/combinatorics.hpp"

namespace hyperclique {

/// A set of sorted i-subsets of [0, n) with O(1) membership.
///
/// Members are kept in lexicographic order. Membership goes through the
/// colex rank of the subset: a dense bitmap when C(n, i) is small enough,
/// otherwise a hash set of ranks.
class SubsetFamily {
 public:
  SubsetFamily(std::size_t universe, std::size_t arity);
  /// Throws ArgumentError if a member is not a canonical i-subset of [0, n)
  /// or appears twice.
  SubsetFamily(std::size_t universe, std::size_t arity, std::vector<Subset> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Subset>& members() const noexcept { return members_; }

  /// `s` must be sorted ascending; anything of the wrong size is absent.
  bool contains(std::span<const Vertex> s) const noexcept;

  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
    return a.universe_ == b.universe_ && a.arity_ == b.arity_ && a.members_ == b.members_;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 27;

  void index_member(std::uint64_t rank);
  bool has_rank(std::uint64_t rank) const noexcept;

  std::size_t universe_;
  std::size_t arity_;
  SubsetRanker ranker_;
  std::vector<Subset> members_;
  std::vector<std::uint64_t> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

/// k-uniform hypergraph on vertices [0, n).
class Hypergraph {
 public:
  /// Throws ArgumentError for k < 2 or malformed edges.
  Hypergraph(std::size_t n, std::size_t k, std::vector<Subset> edges = {});

  /// Builds the hypergraph whose missing edges are exactly `missing`.
  static Hypergraph from_missing(std::size_t n, std::size_t k, std::vector<Subset> missing);

  std::size_t n() const noexcept { return edges_.universe(); }
  std::size_t k() const noexcept { return edges_.arity(); }
  const std::vector<Subset>& edges() const noexcept { return edges_.members(); }
  const SubsetFamily& edge_family() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::uint64_t missing_count() const noexcept;

  bool has_edge(std::span<const Vertex> sorted) const noexcept { return edges_.contains(sorted); }
  bool is_missing(std::span<const Vertex> sorted) const noexcept {
    return sorted.size() == k() && !edges_.contains(sorted);
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) { return a.edges_ == b.edges_; }

 private:
  SubsetFamily edges_;
};

/// All missing edges, lexicographic.
std::vector<Subset> missing_edges(const Hypergraph& h);

/// Missing edges whose vertices all lie in `s` (sorted), lexicographic.
std::vector<Subset> missing_edges_within(const Hypergraph& h, std::span<const Vertex> s);

struct MissingMatching {
  std::vector<Subset> matching;
  Subset uncovered;
};

/// Greedy maximal matching of missing edges inside `s`, scanning missing
/// edges lexicographically. The uncovered vertices contain no missing edge.
/// `s` may be given in any order; it is canonicalized.
MissingMatching maximal_missing_matching(const Hypergraph& h, std::span<const Vertex> s);

/// N_sigma = { x : sigma + x in family }. Requires |sigma| = arity - 1.
Subset neighborhood_of_tuple(const SubsetFamily& family, std::span<const Vertex> sigma);

/// Graph neighbourhood of v (k = 2 only).
Subset neighborhood(const Hypergraph& g, Vertex v);

}  // namespace hyperclique
