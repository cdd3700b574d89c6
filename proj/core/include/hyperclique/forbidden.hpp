#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperclique/hypergraph.hpp"

namespace hyperclique {

/// m pairwise-disjoint missing edges all of whose transversals are cliques.
/// For graphs this is exactly an induced complete multipartite K_2(m).
struct CompleteTupleCertificate {
  std::size_t m = 0;
  std::vector<Subset> tuples;

  friend bool operator==(const CompleteTupleCertificate&, const CompleteTupleCertificate&) = default;
};

enum class TupleViolation {
  none,
  not_missing,
  overlapping,
  transversal_not_clique,
};

struct TupleCheck {
  bool ok = true;
  TupleViolation violation = TupleViolation::none;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks the three certificate conditions and reports the first failure.
/// A transversal {t_1..t_m} is a clique iff each of its k-subsets is an edge,
/// and each such k-subset picks one vertex from k distinct tuples, so the
/// check runs over those "cross" k-sets instead of all k^m transversals.
/// Throws ArgumentError when |tuples| != m, m < k, or a tuple has the wrong
/// arity.
TupleCheck verify_complete_tuple(const Hypergraph& h, const CompleteTupleCertificate& cert);

enum class SearchVerdict { found, none, exhausted };

const char* to_string(SearchVerdict v) noexcept;

struct TupleSearchResult {
  SearchVerdict verdict = SearchVerdict::none;
  std::optional<CompleteTupleCertificate> certificate;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Backtracking search for a complete m-tuple. Missing edges are taken in
/// lexicographic order, so a Found certificate is the lexicographically first
/// one. `none` proves absence; `exhausted` means the node budget ran out and
/// proves nothing.
TupleSearchResult find_complete_tuple(const Hypergraph& h, std::size_t m,
                                      std::uint64_t budget = kDefaultNodeBudget);

/// Looks for 2m vertices whose induced subgraph is K_2(m), i.e. in which
/// every vertex has exactly one non-neighbour. Graphs only.
bool has_induced_biclique(const Hypergraph& g, std::size_t m);

}  // namespace hyperclique
