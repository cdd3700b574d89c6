#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperclique/density.hpp"
#include "hyperclique/extractor.hpp"
#include "hyperclique/forbidden.hpp"
#include "hyperclique/hypergraph.hpp"

namespace hyperclique {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

/// Closed axis-aligned box with integer corners; lo == hi is allowed.
struct Box {
  Point lo;
  Point hi;

  std::size_t dimension() const noexcept { return lo.size(); }
  bool contains(std::span<const Coord> p) const noexcept;
  friend bool operator==(const Box&, const Box&) = default;
};

struct BoxFamily {
  std::size_t d = 1;
  std::vector<Box> boxes;

  std::size_t size() const noexcept { return boxes.size(); }
  /// Throws ArgumentError on a dimension mismatch or lo > hi.
  void validate() const;
  friend bool operator==(const BoxFamily&, const BoxFamily&) = default;
};

/// The coordinatewise maximum of the lower corners if it lies in every box.
/// Throws ArgumentError for an empty list or mixed dimensions.
std::optional<Point> boxes_intersect(std::span<const Box> boxes);
std::optional<Point> boxes_intersect(const BoxFamily& family, std::span<const Vertex> members);

struct NerveHypergraph {
  Hypergraph hypergraph;
  std::vector<std::size_t> box_index;  // vertex -> box
  Density alpha;                       // edges / C(n, d+1)
};

/// (d+1)-uniform intersection hypergraph. Requires more than d+1 boxes.
NerveHypergraph build_nerve(const BoxFamily& family);

/// Searches the nerve for a complete (d+1)-tuple of missing edges. Colorful
/// Helly rules one out, so Found throws ConsistencyError with the certificate
/// attached; an exhausted budget is returned as inconclusive.
TupleSearchResult colorful_check(const BoxFamily& family,
                                 std::uint64_t budget = kDefaultNodeBudget);

struct HellyOutcome {
  Subset subfamily;
  Point point;
  Density alpha;
  HypergraphExtractionOutcome extraction;
  bool vacuous_clique = false;  // clique of size <= d, trimmed to a common point
};

/// Nerve, then hypergraph extraction with m = d+1, then an explicit common
/// point for the returned clique.
HellyOutcome fractional_helly_pipeline(const BoxFamily& family, const ExtractionLimits& limits = {});

struct IntersectingSubfamily {
  std::size_t size = 0;
  Subset indices;
  Point point;
};

/// Largest subfamily with a common point, by sweeping candidate points whose
/// coordinates are lower-corner coordinates.
IntersectingSubfamily max_intersecting_subfamily(const BoxFamily& family);

struct BoxGenParams {
  Coord coord_range = 100;  // lower corners uniform in [0, coord_range)
  Coord max_side = 30;      // side lengths uniform in [0, max_side]
};

/// Deterministic for a fixed seed on every platform.
BoxFamily random_box_family(std::size_t n, std::size_t d, std::uint64_t seed,
                            const BoxGenParams& params = {});

}  // namespace hyperclique
