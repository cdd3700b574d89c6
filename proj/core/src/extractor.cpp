#include "hyperclique/extractor.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hyperclique/bounds.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/io.hpp"

namespace hyperclique {

namespace {

bool clique_meets_bound(Density alpha, std::size_t size, std::size_t n) {
  return n == 0 || meets_theorem1(alpha, Density(size, n));
}

// Larger first, then lexicographically smaller.
bool better_clique(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

void check_certificate(const Hypergraph& h, const CompleteTupleCertificate& cert, const char* where) {
  if (auto check = verify_complete_tuple(h, cert); !check)
    throw ConsistencyError(std::string(where) + " produced an invalid certificate: " + check.detail,
                           to_json(cert).dump());
}

void check_clique(const Hypergraph& h, const Subset& c, const char* where) {
  if (!is_clique(h, c))
    throw ConsistencyError(std::string(where) + " produced a non-clique",
                           Json{{"vertices", c}}.dump());
}

using NeighbourMap = std::map<Subset, Subset>;

// sigma -> N_sigma for every sigma with a nonempty neighbourhood. Each
// (sigma, x) with sigma + x in the family arises from exactly one member.
NeighbourMap neighbourhoods(const SubsetFamily& family) {
  NeighbourMap out;
  for (const auto& f : family.members())
    for (std::size_t j = 0; j < f.size(); ++j) out[without_position(f, j)].push_back(f[j]);
  for (auto& [sigma, nbrs] : out) std::sort(nbrs.begin(), nbrs.end());
  return out;
}

ScoreTable score_per_tuple(const Hypergraph& h, const NeighbourMap& nbrs) {
  ScoreTable scores;
  for (const auto& [sigma, n_sigma] : nbrs)
    for_each_combination(std::span<const Vertex>(n_sigma), h.k(), [&](std::span<const Vertex> t) {
      if (!h.has_edge(t)) ++scores[Subset(t.begin(), t.end())];
    });
  return scores;
}

ScoreTable score_per_vertex(const Hypergraph& h, const SubsetFamily& family) {
  const SubsetRanker ranker(h.n(), family.arity() - 1);
  const std::size_t words = (ranker.count() + 63) / 64;
  // bits[t] marks the sigmas with sigma + t in the family.
  std::vector<std::vector<std::uint64_t>> bits(h.n(), std::vector<std::uint64_t>(words, 0));
  for (const auto& f : family.members())
    for (std::size_t j = 0; j < f.size(); ++j) {
      const std::uint64_t r = ranker.rank(without_position(f, j));
      bits[f[j]][r >> 6] |= std::uint64_t{1} << (r & 63);
    }
  ScoreTable scores;
  for_each_combination(h.n(), h.k(), [&](std::span<const Vertex> tau) {
    if (h.has_edge(tau)) return;
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t acc = bits[tau[0]][w];
      for (std::size_t i = 1; i < tau.size() && acc; ++i) acc &= bits[tau[i]][w];
      count += static_cast<std::uint64_t>(std::popcount(acc));
    }
    if (count) scores.emplace(Subset(tau.begin(), tau.end()), count);
  });
  return scores;
}

}  // namespace

const char* to_string(GraphBranch b) noexcept {
  switch (b) {
    case GraphBranch::no_missing_edges:
      return "no_missing_edges";
    case GraphBranch::certificate:
      return "certificate";
    case GraphBranch::clique:
      return "clique";
  }
  return "unknown";
}

GraphExtractionOutcome extract_graph(const Hypergraph& g) {
  if (g.k() != 2) throw ArgumentError("extract_graph: graphs only (k = 2)");
  const std::size_t n = g.n();
  GraphExtractionOutcome out{CliqueWitness{}, {}};
  auto& trace = out.trace;
  trace.alpha = Density::of(g.edge_count(), binomial(n, 2));
  trace.bound = theorem1_bound(trace.alpha.value()) * static_cast<double>(n);

  const auto missing = missing_edges(g);
  if (missing.empty()) {
    Subset all = iota_subset(n);
    trace.bound_met = clique_meets_bound(trace.alpha, all.size(), n);
    trace.branch = GraphBranch::no_missing_edges;
    out.result = CliqueWitness{std::move(all)};
    return out;
  }

  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adjacent[e[0]][e[1]] = adjacent[e[1]][e[0]] = 1;

  std::vector<Subset> candidates;
  trace.matching_sizes.resize(n);
  trace.neighborhood_missing.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const Subset nv = neighborhood(g, v);
    auto matching = maximal_missing_matching(g, nv);
    trace.matching_sizes[v] = matching.matching.size();
    trace.neighborhood_missing[v] = missing_edges_within(g, nv).size();
    // Uncovered neighbours span no missing edge and all see v.
    candidates.push_back(with_vertex(matching.uncovered, v));
  }

  std::uint64_t top = 0;
  std::vector<Subset> common(missing.size());  // S_tau
  for (std::size_t i = 0; i < missing.size(); ++i) {
    const Vertex a = missing[i][0];
    const Vertex b = missing[i][1];
    for (Vertex v = 0; v < n; ++v)
      if (adjacent[v][a] && adjacent[v][b]) common[i].push_back(v);
    if (!common[i].empty()) trace.tau_scores.emplace(missing[i], common[i].size());
    top = std::max<std::uint64_t>(top, common[i].size());
  }

  if (top > 0) {
    // Lexicographically first missing edge of top score.
    std::size_t chosen = 0;
    while (common[chosen].size() != top) ++chosen;
    trace.chosen_tau = missing[chosen];
    const auto inside = missing_edges_within(g, common[chosen]);
    if (!inside.empty()) {
      CompleteTupleCertificate cert{2, {missing[chosen], inside.front()}};
      check_certificate(g, cert, "extract_graph");
      trace.branch = GraphBranch::certificate;
      trace.bound_met = false;
      out.result = std::move(cert);
      return out;
    }
  }

  for (std::size_t i = 0; i < missing.size(); ++i)
    if (!common[i].empty() && missing_edges_within(g, common[i]).empty()) candidates.push_back(common[i]);
  const Subset& best = *std::min_element(candidates.begin(), candidates.end(), better_clique);
  auto clique = greedy_extend(g, best);
  check_clique(g, clique.vertices, "extract_graph");
  trace.branch = GraphBranch::clique;
  trace.bound_met = clique_meets_bound(trace.alpha, clique.size(), n);
  out.result = std::move(clique);
  return out;
}

ScoreTable score_tau(const Hypergraph& h, const SubsetFamily& family, ScoreStrategy strategy) {
  if (family.arity() < 2) throw ArgumentError("score_tau: family arity must be at least 2");
  if (family.universe() != h.n()) throw ArgumentError("score_tau: family and hypergraph differ in n");

  const std::uint64_t sigma_count = binomial(h.n(), family.arity() - 1);
  const bool bitsets_fit = sigma_count != kSaturated && sigma_count <= (std::uint64_t{1} << 30) / std::max<std::size_t>(h.n(), 1);

  if (strategy == ScoreStrategy::per_vertex && bitsets_fit) return score_per_vertex(h, family);
  const auto nbrs = neighbourhoods(family);
  if (strategy == ScoreStrategy::automatic && bitsets_fit) {
    double per_tuple_cost = 0;
    for (const auto& [sigma, n_sigma] : nbrs)
      per_tuple_cost += static_cast<double>(binomial(n_sigma.size(), h.k()));
    const double per_vertex_cost = static_cast<double>(h.missing_count()) * h.k() *
                                   static_cast<double>((sigma_count + 63) / 64);
    if (per_vertex_cost < per_tuple_cost) return score_per_vertex(h, family);
  }
  return score_per_tuple(h, nbrs);
}

std::optional<ShrinkStep> shrink_step(const Hypergraph& h, const SubsetFamily& family,
                                      std::span<const Subset> previous, ScoreStrategy strategy) {
  auto scores = score_tau(h, family, strategy);
  if (scores.empty()) return std::nullopt;

  auto best = scores.begin();
  for (auto it = scores.begin(); it != scores.end(); ++it)
    if (it->second > best->second) best = it;
  Subset tau = best->first;

  for (const auto& p : previous)
    if (!disjoint(p, tau))
      throw ConsistencyError("shrink_step picked a missing edge meeting an earlier one",
                             Json{{"tau", tau}, {"previous", p}}.dump());

  std::vector<Subset> next;
  for (const auto& f : family.members()) {
    const auto pos = std::lower_bound(f.begin(), f.end(), tau[0]);
    if (pos == f.end() || *pos != tau[0]) continue;
    Subset sigma = without_position(f, static_cast<std::size_t>(pos - f.begin()));
    const bool all = std::all_of(tau.begin() + 1, tau.end(), [&](Vertex t) {
      return !std::binary_search(sigma.begin(), sigma.end(), t) && family.contains(with_vertex(sigma, t));
    });
    if (all) next.push_back(std::move(sigma));
  }
  if (next.size() != best->second)
    throw ConsistencyError("shrink_step: family size " + std::to_string(next.size()) +
                           " disagrees with score " + std::to_string(best->second));
  SubsetFamily next_family(family.universe(), family.arity() - 1, std::move(next));
  return ShrinkStep{std::move(tau), std::move(next_family), std::move(scores)};
}

HypergraphExtractionOutcome extract_hypergraph(const Hypergraph& h, std::size_t m,
                                               const ExtractionLimits& limits) {
  if (m < h.k())
    throw ArgumentError("extract_hypergraph: m = " + std::to_string(m) + " is below k = " +
                        std::to_string(h.k()));
  const std::size_t n = h.n();
  const int k = static_cast<int>(h.k());
  HypergraphExtractionOutcome out{CliqueWitness{}, {}};
  auto& trace = out.trace;
  const std::uint64_t total = binomial(n, m);

  auto set_density = [&](std::uint64_t count) {
    trace.clique_count = count;
    trace.alpha = Density::of(count, total);
    trace.beta = trace.alpha.is_zero() ? 0.0 : beta_recursion(trace.alpha.value(), k, static_cast<int>(m));
    trace.bound = trace.beta * static_cast<double>(n);
  };
  auto finish_clique = [&](CliqueWitness c) {
    check_clique(h, c.vertices, "extract_hypergraph");
    trace.bound_met = static_cast<double>(c.size()) >= trace.bound;
    out.result = std::move(c);
    return out;
  };

  if (h.missing_count() == 0) {
    set_density(total);
    return finish_clique(CliqueWitness{iota_subset(n)});
  }

  SubsetFamily family(n, m, enumerate_m_cliques(h, m, limits.max_family));
  set_density(family.size());
  trace.family_sizes.push_back(family.size());

  for (std::size_t round = 1; round < m; ++round) {
    auto step = shrink_step(h, family, trace.chosen, limits.strategy);
    if (!step) {
      trace.fallback = true;
      trace.fallback_reason = "no missing edge lies in any neighbourhood in round " + std::to_string(round);
      break;
    }
    trace.round_scores.push_back(std::move(step->scores));
    trace.chosen.push_back(std::move(step->tau));
    family = std::move(step->next);
    trace.family_sizes.push_back(family.size());
  }

  if (!trace.fallback) {
    Subset last;
    for (const auto& s : family.members()) last.push_back(s.front());
    const auto inside = missing_edges_within(h, last);
    if (!inside.empty()) {
      CompleteTupleCertificate cert{m, trace.chosen};
      cert.tuples.push_back(inside.front());
      check_certificate(h, cert, "extract_hypergraph");
      trace.chosen.push_back(inside.front());
      trace.bound_met = false;
      out.result = std::move(cert);
      return out;
    }
    return finish_clique(greedy_extend(h, last));
  }

  // Members of every family in the chain are cliques; extend the first few.
  CliqueWitness best = greedy_extend(h, Subset{});
  const std::size_t seeds = std::min(family.size(), limits.fallback_seeds);
  for (std::size_t i = 0; i < seeds; ++i) {
    auto c = greedy_extend(h, family.members()[i]);
    if (better_clique(c.vertices, best.vertices)) best = std::move(c);
  }
  return finish_clique(std::move(best));
}

}  // namespace hyperclique
