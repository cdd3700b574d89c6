#include "hyperclique/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hyperclique/errors.hpp"

namespace hyperclique {

namespace {

std::string describe(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

SubsetFamily::SubsetFamily(std::size_t universe, std::size_t arity)
    : universe_(universe), arity_(arity), ranker_(universe, arity) {
  if (ranker_.count() <= kDenseLimit) dense_.assign((ranker_.count() + 63) / 64, 0);
}

SubsetFamily::SubsetFamily(std::size_t universe, std::size_t arity, std::vector<Subset> members)
    : SubsetFamily(universe, arity) {
  for (const auto& s : members) {
    if (s.size() != arity_ || !is_canonical(s) || (!s.empty() && s.back() >= universe_))
      throw ArgumentError("not a sorted " + std::to_string(arity_) + "-subset of [0, " +
                          std::to_string(universe_) + "): " + describe(s));
  }
  std::sort(members.begin(), members.end());
  if (auto dup = std::adjacent_find(members.begin(), members.end()); dup != members.end())
    throw ArgumentError("duplicate member " + describe(*dup));
  members_ = std::move(members);
  for (const auto& s : members_) index_member(ranker_.rank(s));
}

void SubsetFamily::index_member(std::uint64_t rank) {
  if (ranker_.count() <= kDenseLimit)
    dense_[rank >> 6] |= std::uint64_t{1} << (rank & 63);
  else
    sparse_.insert(rank);
}

bool SubsetFamily::has_rank(std::uint64_t rank) const noexcept {
  if (ranker_.count() <= kDenseLimit) return (dense_[rank >> 6] >> (rank & 63)) & 1;
  return sparse_.contains(rank);
}

bool SubsetFamily::contains(std::span<const Vertex> s) const noexcept {
  if (s.size() != arity_ || members_.empty()) return false;
  if (!s.empty() && s.back() >= universe_) return false;
  return has_rank(ranker_.rank(s));
}

namespace {

std::size_t checked_arity(std::size_t k) {
  if (k < 2) throw ArgumentError("hypergraph arity must be at least 2, got " + std::to_string(k));
  return k;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::size_t k, std::vector<Subset> edges)
    : edges_(n, checked_arity(k), std::move(edges)) {}

Hypergraph Hypergraph::from_missing(std::size_t n, std::size_t k, std::vector<Subset> missing) {
  // Validate through a family first so malformed input is reported the same way.
  const SubsetFamily absent(n, k, std::move(missing));
  std::vector<Subset> edges;
  edges.reserve(binomial(n, k) - absent.size());
  for_each_combination(n, k, [&](std::span<const Vertex> s) {
    if (!absent.contains(s)) edges.emplace_back(s.begin(), s.end());
  });
  return Hypergraph(n, k, std::move(edges));
}

std::uint64_t Hypergraph::missing_count() const noexcept {
  return binomial(n(), k()) - edge_count();
}

std::vector<Subset> missing_edges(const Hypergraph& h) {
  return missing_edges_within(h, iota_subset(h.n()));
}

std::vector<Subset> missing_edges_within(const Hypergraph& h, std::span<const Vertex> s) {
  std::vector<Subset> out;
  for_each_combination(s, h.k(), [&](std::span<const Vertex> t) {
    if (!h.has_edge(t)) out.emplace_back(t.begin(), t.end());
  });
  return out;
}

namespace {

Subset canonical_vertices(const Hypergraph& h, std::span<const Vertex> s) {
  Subset out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= h.n())
    throw ArgumentError("vertex " + std::to_string(out.back()) + " out of range [0, " +
                        std::to_string(h.n()) + ")");
  return out;
}

}  // namespace

MissingMatching maximal_missing_matching(const Hypergraph& h, std::span<const Vertex> s) {
  const Subset pool = canonical_vertices(h, s);
  std::vector<bool> covered(h.n(), false);
  MissingMatching result;
  for_each_combination(std::span<const Vertex>(pool), h.k(), [&](std::span<const Vertex> t) {
    if (h.has_edge(t)) return;
    if (std::any_of(t.begin(), t.end(), [&](Vertex v) { return covered[v]; })) return;
    for (Vertex v : t) covered[v] = true;
    result.matching.emplace_back(t.begin(), t.end());
  });
  for (Vertex v : pool)
    if (!covered[v]) result.uncovered.push_back(v);
  return result;
}

Subset neighborhood_of_tuple(const SubsetFamily& family, std::span<const Vertex> sigma) {
  if (family.arity() == 0 || sigma.size() + 1 != family.arity())
    throw ArgumentError("neighborhood_of_tuple: |sigma| = " + std::to_string(sigma.size()) +
                        " but the family has arity " + std::to_string(family.arity()));
  if (!is_canonical(sigma)) throw ArgumentError("neighborhood_of_tuple: sigma must be sorted");
  Subset out;
  Subset probe(sigma.begin(), sigma.end());
  probe.push_back(0);
  for (Vertex x = 0; x < family.universe(); ++x) {
    if (std::binary_search(sigma.begin(), sigma.end(), x)) continue;
    // Insert x into its sorted position.
    const auto pos = static_cast<std::size_t>(std::lower_bound(sigma.begin(), sigma.end(), x) - sigma.begin());
    std::copy(sigma.begin(), sigma.begin() + pos, probe.begin());
    probe[pos] = x;
    std::copy(sigma.begin() + pos, sigma.end(), probe.begin() + pos + 1);
    if (family.contains(probe)) out.push_back(x);
  }
  return out;
}

Subset neighborhood(const Hypergraph& g, Vertex v) {
  if (g.k() != 2) throw ArgumentError("neighborhood: graphs only");
  const Vertex sigma[] = {v};
  return neighborhood_of_tuple(g.edge_family(), sigma);
}

}  // namespace hyperclique
