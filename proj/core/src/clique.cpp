#include "hyperclique/clique.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hyperclique/errors.hpp"

namespace hyperclique {

namespace {

// True iff every k-subset of current + {v} that contains v is an edge.
// `current` must be sorted and must not contain v.
bool extends(const Hypergraph& h, std::span<const Vertex> current, Vertex v) {
  const std::size_t k = h.k();
  if (current.size() + 1 < k) return true;
  return for_each_combination(current, k - 1, [&](std::span<const Vertex> t) {
    return h.has_edge(with_vertex(t, v));
  });
}

// True iff every k-subset of current + {v, u} containing both v and u is an
// edge. With current + {v} and current + {u} cliques this makes
// current + {v, u} a clique.
bool pair_extends(const Hypergraph& h, std::span<const Vertex> current, Vertex v, Vertex u) {
  const std::size_t k = h.k();
  if (current.size() + 2 < k) return true;
  const Vertex lo = std::min(v, u);
  const Vertex hi = std::max(v, u);
  return for_each_combination(current, k - 2, [&](std::span<const Vertex> t) {
    return h.has_edge(with_vertex(with_vertex(t, lo), hi));
  });
}

// Depth-first walk over cliques in lexicographic order. `visit(clique)` is
// called for every clique of size `target`.
template <class Visit>
void walk_cliques(const Hypergraph& h, Subset& current, const std::vector<Vertex>& candidates,
                  std::size_t target, Visit& visit) {
  if (current.size() == target) {
    visit(current);
    return;
  }
  if (current.size() + candidates.size() < target) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (current.size() + (candidates.size() - i) < target) return;
    const Vertex v = candidates[i];
    std::vector<Vertex> next;
    next.reserve(candidates.size() - i - 1);
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (pair_extends(h, current, v, candidates[j])) next.push_back(candidates[j]);
    current.push_back(v);
    walk_cliques(h, current, next, target, visit);
    current.pop_back();
  }
}

void require_m_at_least_k(const Hypergraph& h, std::size_t m, const char* op) {
  if (m < h.k())
    throw ArgumentError(std::string(op) + ": m = " + std::to_string(m) + " is below k = " +
                        std::to_string(h.k()));
}

// ---------------------------------------------------------------------------
// Graph kernel: multi-word bitsets and greedy colouring bounds.

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return words_.size() * 64;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  void subtract(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  }

 private:
  std::vector<std::uint64_t> words_;
};

class GraphMaxClique {
 public:
  explicit GraphMaxClique(const Hypergraph& g) : n_(g.n()), adj_(n_, Bitset(n_)) {
    for (const auto& e : g.edges()) {
      adj_[e[0]].set(e[1]);
      adj_[e[1]].set(e[0]);
    }
  }

  Subset solve() {
    Bitset all(n_);
    for (std::size_t v = 0; v < n_; ++v) all.set(v);
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential colouring; colours[i] bounds the clique size reachable
  // from order[0..i].
  void colour(const Bitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& colours) const {
    Bitset uncoloured = p;
    std::size_t c = 0;
    while (!uncoloured.none()) {
      ++c;
      Bitset q = uncoloured;
      while (!q.none()) {
        const std::size_t v = q.first();
        q.reset(v);
        uncoloured.reset(v);
        q.subtract(adj_[v]);
        order.push_back(static_cast<Vertex>(v));
        colours.push_back(c);
      }
    }
  }

  void expand(Bitset p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> colours;
    colour(p, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colours[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      Bitset next = p;
      next &= adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::size_t n_;
  std::vector<Bitset> adj_;
  Subset current_;
  Subset best_;
};

// Generic arity: size bound only.
class HypergraphMaxClique {
 public:
  explicit HypergraphMaxClique(const Hypergraph& h) : h_(h) {}

  Subset solve() {
    expand(iota_subset(h_.n()));
    return best_;
  }

 private:
  void expand(const std::vector<Vertex>& candidates) {
    if (current_.size() > best_.size()) best_ = current_;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current_.size() + (candidates.size() - i) <= best_.size()) return;
      const Vertex v = candidates[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (pair_extends(h_, current_, v, candidates[j])) next.push_back(candidates[j]);
      current_.push_back(v);
      expand(next);
      current_.pop_back();
    }
  }

  const Hypergraph& h_;
  Subset current_;
  Subset best_;
};

}  // namespace

bool is_clique(const Hypergraph& h, std::span<const Vertex> s) {
  return for_each_combination(s, h.k(), [&](std::span<const Vertex> t) { return h.has_edge(t); });
}

std::uint64_t count_m_cliques(const Hypergraph& h, std::size_t m) {
  require_m_at_least_k(h, m, "count_m_cliques");
  if (m == h.k()) return h.edge_count();
  std::uint64_t count = 0;
  Subset current;
  auto visit = [&](const Subset&) { ++count; };
  walk_cliques(h, current, iota_subset(h.n()), m, visit);
  return count;
}

std::vector<Subset> enumerate_m_cliques(const Hypergraph& h, std::size_t m, std::uint64_t limit) {
  require_m_at_least_k(h, m, "enumerate_m_cliques");
  if (const auto total = binomial(h.n(), m); total > limit)
    throw SizeRefusal("refusing to enumerate " + std::to_string(m) + "-cliques: C(" +
                      std::to_string(h.n()) + ", " + std::to_string(m) + ") = " +
                      (total == kSaturated ? std::string("overflow") : std::to_string(total)) +
                      " exceeds the limit " + std::to_string(limit));
  if (m == h.k()) return h.edges();
  std::vector<Subset> out;
  Subset current;
  auto visit = [&](const Subset& c) { out.push_back(c); };
  walk_cliques(h, current, iota_subset(h.n()), m, visit);
  return out;
}

CliqueWitness max_clique(const Hypergraph& h) {
  if (h.k() == 2) return {GraphMaxClique(h).solve()};
  return {HypergraphMaxClique(h).solve()};
}

CliqueWitness greedy_extend(const Hypergraph& h, std::span<const Vertex> seed) {
  if (!is_canonical(seed) || (!seed.empty() && seed.back() >= h.n()) || !is_clique(h, seed))
    throw ArgumentError("greedy_extend: seed must be a sorted clique");
  Subset current(seed.begin(), seed.end());
  for (Vertex v = 0; v < h.n(); ++v) {
    if (std::binary_search(current.begin(), current.end(), v)) continue;
    if (extends(h, current, v)) current = with_vertex(current, v);
  }
  return {std::move(current)};
}

}  // namespace hyperclique
