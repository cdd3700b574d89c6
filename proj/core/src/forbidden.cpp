#include "hyperclique/forbidden.hpp"

#include <algorithm>
#include <string>

#include "hyperclique/errors.hpp"

namespace hyperclique {

namespace {

// Every k-set taking exactly one vertex from each of `parts` is an edge.
bool cross_sets_are_edges(const Hypergraph& h, std::span<const Subset* const> parts) {
  Subset pick(parts.size());
  Subset sorted(parts.size());
  auto rec = [&](auto& self, std::size_t depth) -> bool {
    if (depth == parts.size()) {
      sorted = pick;
      std::sort(sorted.begin(), sorted.end());
      return h.has_edge(sorted);
    }
    for (Vertex v : *parts[depth]) {
      pick[depth] = v;
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

std::string describe(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

class TupleSearch {
 public:
  TupleSearch(const Hypergraph& h, std::size_t m, std::uint64_t budget)
      : h_(h), m_(m), budget_(budget), missing_(missing_edges(h)) {}

  TupleSearchResult run() {
    std::vector<std::size_t> all(missing_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const bool stopped = dfs(all);
    TupleSearchResult result;
    result.nodes = nodes_;
    if (exhausted_) {
      result.verdict = SearchVerdict::exhausted;
    } else if (stopped) {
      result.verdict = SearchVerdict::found;
      CompleteTupleCertificate cert{m_, {}};
      for (std::size_t i : chosen_) cert.tuples.push_back(missing_[i]);
      result.certificate = std::move(cert);
    } else {
      result.verdict = SearchVerdict::none;
    }
    return result;
  }

 private:
  // Returns true to stop the whole search (found or out of budget).
  bool dfs(const std::vector<std::size_t>& candidates) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return true;
    }
    if (chosen_.size() == m_) return true;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (chosen_.size() + (candidates.size() - i) < m_) return false;
      const std::size_t tau = candidates[i];
      std::vector<std::size_t> next;
      if (chosen_.size() + 1 < m_) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
          if (compatible(tau, candidates[j])) next.push_back(candidates[j]);
      }
      chosen_.push_back(tau);
      if (dfs(next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  // Constraints that mention both tau (about to be chosen) and rho: rho is
  // disjoint from tau, and each cross k-set over tau, rho and k-2 already
  // chosen edges is an edge. Constraints not involving tau were checked when
  // rho entered the candidate list.
  bool compatible(std::size_t tau, std::size_t rho) const {
    const Subset& a = missing_[tau];
    const Subset& b = missing_[rho];
    if (!disjoint(a, b)) return false;
    const std::size_t k = h_.k();
    if (chosen_.size() + 2 < k) return true;
    std::vector<Vertex> idx(chosen_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Vertex>(i);
    std::vector<const Subset*> parts(k);
    return for_each_combination(std::span<const Vertex>(idx), k - 2, [&](std::span<const Vertex> j) {
      for (std::size_t p = 0; p < j.size(); ++p) parts[p] = &missing_[chosen_[j[p]]];
      parts[k - 2] = &a;
      parts[k - 1] = &b;
      return cross_sets_are_edges(h_, parts);
    });
  }

  const Hypergraph& h_;
  std::size_t m_;
  std::uint64_t budget_;
  std::vector<Subset> missing_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

const char* to_string(SearchVerdict v) noexcept {
  switch (v) {
    case SearchVerdict::found:
      return "found";
    case SearchVerdict::none:
      return "none";
    case SearchVerdict::exhausted:
      return "exhausted";
  }
  return "unknown";
}

TupleCheck verify_complete_tuple(const Hypergraph& h, const CompleteTupleCertificate& cert) {
  const std::size_t k = h.k();
  if (cert.m < k)
    throw ArgumentError("certificate m = " + std::to_string(cert.m) + " is below k = " + std::to_string(k));
  if (cert.tuples.size() != cert.m)
    throw ArgumentError("certificate lists " + std::to_string(cert.tuples.size()) +
                        " tuples but m = " + std::to_string(cert.m));
  for (std::size_t i = 0; i < cert.tuples.size(); ++i) {
    const Subset& t = cert.tuples[i];
    if (t.size() != k || !is_canonical(t) || t.back() >= h.n())
      throw ArgumentError("tuples[" + std::to_string(i) + "] is not a sorted " +
                          std::to_string(k) + "-subset of the vertex set");
  }

  for (std::size_t i = 0; i < cert.tuples.size(); ++i)
    if (h.has_edge(cert.tuples[i]))
      return {false, TupleViolation::not_missing,
              "tuples[" + std::to_string(i) + "] = " + describe(cert.tuples[i]) + " is an edge"};

  for (std::size_t i = 0; i < cert.tuples.size(); ++i)
    for (std::size_t j = i + 1; j < cert.tuples.size(); ++j)
      if (!disjoint(cert.tuples[i], cert.tuples[j]))
        return {false, TupleViolation::overlapping,
                "tuples[" + std::to_string(i) + "] and tuples[" + std::to_string(j) + "] intersect"};

  std::vector<const Subset*> parts(k);
  std::string failure;
  const bool ok = for_each_combination(cert.m, k, [&](std::span<const Vertex> j) {
    for (std::size_t p = 0; p < k; ++p) parts[p] = &cert.tuples[j[p]];
    if (cross_sets_are_edges(h, parts)) return true;
    failure = "a transversal through tuples";
    for (Vertex idx : j) failure += " " + std::to_string(idx);
    failure += " is not a clique";
    return false;
  });
  if (!ok) return {false, TupleViolation::transversal_not_clique, failure};
  return {};
}

TupleSearchResult find_complete_tuple(const Hypergraph& h, std::size_t m, std::uint64_t budget) {
  if (m < h.k())
    throw ArgumentError("find_complete_tuple: m = " + std::to_string(m) + " is below k = " +
                        std::to_string(h.k()));
  return TupleSearch(h, m, budget).run();
}

bool has_induced_biclique(const Hypergraph& g, std::size_t m) {
  if (g.k() != 2) throw ArgumentError("has_induced_biclique: graphs only (k = 2)");
  const std::size_t n = g.n();
  if (m == 0) return true;
  if (2 * m > n) return false;
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adjacent[e[0]][e[1]] = adjacent[e[1]][e[0]] = 1;

  // K_2(m) on 2m vertices: each vertex misses exactly one other.
  return !for_each_combination(n, 2 * m, [&](std::span<const Vertex> s) {
    for (Vertex a : s) {
      std::size_t non_neighbours = 0;
      for (Vertex b : s)
        if (a != b && !adjacent[a][b] && ++non_neighbours > 1) break;
      if (non_neighbours != 1) return true;
    }
    return false;
  });
}

}  // namespace hyperclique
