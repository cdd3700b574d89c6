#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hyperclique/clique.hpp"
#include "hyperclique/density.hpp"
#include "hyperclique/forbidden.hpp"

namespace hyperclique {

using ExtractionResult = std::variant<CliqueWitness, CompleteTupleCertificate>;

inline bool is_certificate(const ExtractionResult& r) {
  return std::holds_alternative<CompleteTupleCertificate>(r);
}

/// Missing edge -> score, lexicographic in the missing edge. Only positive
/// scores are stored.
using ScoreTable = std::map<Subset, std::uint64_t>;

enum class GraphBranch {
  no_missing_edges,  // the whole vertex set is a clique
  certificate,       // the top-scoring S_tau contains a missing edge
  clique,            // best clique candidate, greedily extended
};

const char* to_string(GraphBranch b) noexcept;

struct GraphExtractionTrace {
  std::vector<std::size_t> matching_sizes;            // per vertex v: greedy matching size in N_v
  std::vector<std::uint64_t> neighborhood_missing;    // per vertex v: missing edges inside N_v
  ScoreTable tau_scores;                              // |S_tau| per missing edge
  std::optional<Subset> chosen_tau;
  Density alpha;
  double bound = 0.0;  // (1 - sqrt(1 - alpha))^2 * n
  bool bound_met = false;
  GraphBranch branch = GraphBranch::no_missing_edges;
};

struct GraphExtractionOutcome {
  ExtractionResult result;
  GraphExtractionTrace trace;
};

/// Dichotomy for graphs: either an induced K_{2,2} certificate or a clique.
/// If the graph has no induced K_{2,2} the clique has at least
/// (1 - sqrt(1 - alpha))^2 * n vertices.
///
/// Branch order: the lexicographically first top-scoring missing edge tau is
/// examined; if S_tau = { v : tau in N_v } contains a missing edge the pair is
/// returned as a certificate. Otherwise the largest of the candidates
/// U_v + v (uncovered vertices of the matching in N_v) and the clique sets
/// S_tau is greedily extended and returned.
GraphExtractionOutcome extract_graph(const Hypergraph& g);

enum class ScoreStrategy {
  automatic,
  per_tuple,     // enumerate k-subsets of each N_sigma
  per_vertex,    // AND of per-vertex bitsets over ranked sigmas
};

/// For each missing edge tau, the number of (i-1)-sets sigma with
/// tau contained in N_sigma. Requires family arity >= 2.
ScoreTable score_tau(const Hypergraph& h, const SubsetFamily& family,
                     ScoreStrategy strategy = ScoreStrategy::automatic);

struct ShrinkStep {
  Subset tau;
  SubsetFamily next;  // { sigma : tau in N_sigma }
  ScoreTable scores;
};

/// One shrinking round: picks the top-scoring missing edge (lexicographic
/// tie-break) and the family of (i-1)-sets whose neighbourhood contains it.
/// Returns nullopt when every score is zero. Throws ConsistencyError if the
/// chosen edge meets one of `previous`.
std::optional<ShrinkStep> shrink_step(const Hypergraph& h, const SubsetFamily& family,
                                      std::span<const Subset> previous,
                                      ScoreStrategy strategy = ScoreStrategy::automatic);

struct HypergraphExtractionTrace {
  std::vector<Subset> chosen;               // tau_1 .. tau_{m-1} (and tau_m for certificates)
  std::vector<std::uint64_t> family_sizes;  // |F_m|, |F_{m-1}|, ...
  std::vector<ScoreTable> round_scores;
  std::uint64_t clique_count = 0;           // c_m(H)
  Density alpha;                            // c_m / C(n, m)
  double beta = 0.0;
  double bound = 0.0;                       // beta * n
  bool bound_met = false;
  bool fallback = false;
  std::string fallback_reason;
};

struct HypergraphExtractionOutcome {
  ExtractionResult result;
  HypergraphExtractionTrace trace;
};

struct ExtractionLimits {
  /// Refuse when C(n, m) exceeds this; F_m is enumerated in full.
  std::uint64_t max_family = std::uint64_t{1} << 22;
  /// Seeds tried (in family order) when a stalled run falls back to greedy.
  std::size_t fallback_seeds = 4096;
  ScoreStrategy strategy = ScoreStrategy::automatic;
};

/// Iterated shrinking from F_m = { m-cliques } down to a vertex set F_1,
/// which is either a clique or completes a certificate tau_1..tau_m. Stalls
/// (zero scores or an empty family) fall back to the best greedy clique.
HypergraphExtractionOutcome extract_hypergraph(const Hypergraph& h, std::size_t m,
                                               const ExtractionLimits& limits = {});

}  // namespace hyperclique
