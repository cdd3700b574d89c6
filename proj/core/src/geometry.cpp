#include "hyperclique/geometry.hpp"

#include <algorithm>
#include <string>

#include "hyperclique/errors.hpp"
#include "hyperclique/io.hpp"
#include "hyperclique/rng.hpp"

namespace hyperclique {

bool Box::contains(std::span<const Coord> p) const noexcept {
  if (p.size() != lo.size()) return false;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] < lo[j] || p[j] > hi[j]) return false;
  return true;
}

void BoxFamily::validate() const {
  if (d < 1) throw ArgumentError("box family dimension must be at least 1");
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes[i];
    if (b.lo.size() != d || b.hi.size() != d)
      throw ArgumentError("boxes[" + std::to_string(i) + "] is not " + std::to_string(d) + "-dimensional");
    for (std::size_t j = 0; j < d; ++j)
      if (b.lo[j] > b.hi[j])
        throw ArgumentError("boxes[" + std::to_string(i) + "]: lo[" + std::to_string(j) + "] > hi[" +
                            std::to_string(j) + "]");
  }
}

namespace {

// Running intersection [lo, hi] of a set of boxes.
struct Slab {
  Point lo;
  Point hi;

  explicit Slab(const Box& b) : lo(b.lo), hi(b.hi) {}

  bool meet(const Box& b) {
    for (std::size_t j = 0; j < lo.size(); ++j) {
      lo[j] = std::max(lo[j], b.lo[j]);
      hi[j] = std::min(hi[j], b.hi[j]);
      if (lo[j] > hi[j]) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<Point> boxes_intersect(std::span<const Box> boxes) {
  if (boxes.empty()) throw ArgumentError("boxes_intersect: empty list");
  const std::size_t d = boxes.front().dimension();
  for (const Box& b : boxes)
    if (b.dimension() != d || b.hi.size() != d) throw ArgumentError("boxes_intersect: mixed dimensions");
  Slab slab(boxes.front());
  for (const Box& b : boxes.subspan(1))
    if (!slab.meet(b)) return std::nullopt;
  return slab.lo;
}

std::optional<Point> boxes_intersect(const BoxFamily& family, std::span<const Vertex> members) {
  std::vector<Box> picked;
  picked.reserve(members.size());
  for (Vertex v : members) {
    if (v >= family.size()) throw ArgumentError("boxes_intersect: index out of range");
    picked.push_back(family.boxes[v]);
  }
  return boxes_intersect(picked);
}

NerveHypergraph build_nerve(const BoxFamily& family) {
  family.validate();
  const std::size_t n = family.size();
  const std::size_t k = family.d + 1;
  if (n <= k)
    throw ArgumentError("build_nerve: need more than d+1 = " + std::to_string(k) + " boxes, got " +
                        std::to_string(n));

  std::vector<Subset> edges;
  Subset current;
  // Depth-first in lexicographic order, pruning as soon as the partial
  // intersection is empty.
  auto rec = [&](auto& self, Vertex start, const Slab& slab) -> void {
    if (current.size() == k) {
      edges.push_back(current);
      return;
    }
    for (Vertex v = start; v + (k - current.size()) <= n; ++v) {
      Slab next = slab;
      if (!next.meet(family.boxes[v])) continue;
      current.push_back(v);
      self(self, v + 1, next);
      current.pop_back();
    }
  };
  for (Vertex v = 0; v + k <= n; ++v) {
    current.assign(1, v);
    rec(rec, v + 1, Slab(family.boxes[v]));
  }

  NerveHypergraph nerve{Hypergraph(n, k, std::move(edges)), {}, {}};
  nerve.box_index.resize(n);
  for (std::size_t i = 0; i < n; ++i) nerve.box_index[i] = i;
  nerve.alpha = Density::of(nerve.hypergraph.edge_count(), binomial(n, k));
  return nerve;
}

TupleSearchResult colorful_check(const BoxFamily& family, std::uint64_t budget) {
  family.validate();
  // A complete (d+1)-tuple needs (d+1)^2 boxes, and the nerve needs n > d+1.
  if (family.size() <= family.d + 1) return {};
  const auto nerve = build_nerve(family);
  auto result = find_complete_tuple(nerve.hypergraph, family.d + 1, budget);
  if (result.verdict == SearchVerdict::found)
    throw ConsistencyError("complete (d+1)-tuple of missing edges in a box nerve; colorful Helly is violated",
                           Json{{"certificate", to_json(*result.certificate)}, {"family", to_json(family)}}.dump());
  return result;
}

HellyOutcome fractional_helly_pipeline(const BoxFamily& family, const ExtractionLimits& limits) {
  const auto nerve = build_nerve(family);
  HellyOutcome out{{}, {}, nerve.alpha, extract_hypergraph(nerve.hypergraph, family.d + 1, limits)};
  if (const auto* cert = std::get_if<CompleteTupleCertificate>(&out.extraction.result))
    throw ConsistencyError("box nerve yielded a complete (d+1)-tuple certificate",
                           Json{{"certificate", to_json(*cert)}, {"family", to_json(family)}}.dump());

  const auto& clique = std::get<CliqueWitness>(out.extraction.result).vertices;
  if (clique.size() > family.d) {
    auto point = boxes_intersect(family, clique);
    if (!point)
      throw ConsistencyError("nerve clique with empty intersection; Helly is violated",
                             Json{{"clique", clique}, {"family", to_json(family)}}.dump());
    out.subfamily = clique;
    out.point = std::move(*point);
    return out;
  }

  // Cliques of size <= d are vacuous in a (d+1)-uniform nerve; keep the
  // members that preserve a common point.
  out.vacuous_clique = true;
  Slab slab(family.boxes[clique.empty() ? 0 : clique.front()]);
  out.subfamily.push_back(clique.empty() ? 0 : clique.front());
  for (std::size_t i = 1; i < clique.size(); ++i) {
    Slab next = slab;
    if (next.meet(family.boxes[clique[i]])) {
      slab = next;
      out.subfamily.push_back(clique[i]);
    }
  }
  out.point = slab.lo;
  return out;
}

IntersectingSubfamily max_intersecting_subfamily(const BoxFamily& family) {
  family.validate();
  IntersectingSubfamily best;
  if (family.boxes.empty()) return best;
  const std::size_t d = family.d;

  std::vector<std::vector<Coord>> axes(d);
  double grid = 1;
  for (std::size_t j = 0; j < d; ++j) {
    for (const Box& b : family.boxes) axes[j].push_back(b.lo[j]);
    std::sort(axes[j].begin(), axes[j].end());
    axes[j].erase(std::unique(axes[j].begin(), axes[j].end()), axes[j].end());
    grid *= static_cast<double>(axes[j].size());
  }
  if (grid * static_cast<double>(family.size()) > 4e9)
    throw SizeRefusal("max_intersecting_subfamily: candidate grid too large");

  Point p(d);
  std::vector<std::size_t> at(d, 0);
  while (true) {
    for (std::size_t j = 0; j < d; ++j) p[j] = axes[j][at[j]];
    std::size_t count = 0;
    for (const Box& b : family.boxes) count += b.contains(p);
    if (count > best.size) {
      best.size = count;
      best.point = p;
    }
    std::size_t j = d;
    while (j > 0 && at[j - 1] + 1 == axes[j - 1].size()) at[--j] = 0;
    if (j == 0) break;
    ++at[j - 1];
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family.boxes[i].contains(best.point)) best.indices.push_back(static_cast<Vertex>(i));
  return best;
}

BoxFamily random_box_family(std::size_t n, std::size_t d, std::uint64_t seed, const BoxGenParams& params) {
  if (n < 1 || d < 1) throw ArgumentError("random_box_family: need n >= 1 and d >= 1");
  if (params.coord_range < 1 || params.max_side < 0)
    throw ArgumentError("random_box_family: coord_range must be positive and max_side nonnegative");
  Rng rng(seed);
  BoxFamily family{d, {}};
  family.boxes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Box b{Point(d), Point(d)};
    for (std::size_t j = 0; j < d; ++j) {
      b.lo[j] = static_cast<Coord>(uniform_below(rng, static_cast<std::uint64_t>(params.coord_range)));
      b.hi[j] = b.lo[j] + static_cast<Coord>(uniform_below(rng, static_cast<std::uint64_t>(params.max_side) + 1));
    }
    family.boxes.push_back(std::move(b));
  }
  return family;
}

}  // namespace hyperclique
