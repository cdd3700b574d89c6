#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

namespace hyperclique {

using Vertex = std::uint32_t;
/// A sorted, duplicate-free set of vertices.
using Subset = std::vector<Vertex>;

__extension__ typedef unsigned __int128 UInt128;

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// C(n, k), saturating at kSaturated on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Continuous convex extension of C(x, k): the falling-factorial polynomial
/// for x >= k-1 and 0 below. Throws ArgumentError for k <= 0.
double ext_binom(double x, int k);

/// Calls `f(std::span<const Vertex>)` for every k-subset of `pool` in
/// lexicographic order (positions, so lexicographic in values when `pool` is
/// sorted). If `f` returns bool, returning false stops the enumeration.
/// Returns false iff the enumeration was stopped early.
template <class F>
bool for_each_combination(std::span<const Vertex> pool, std::size_t k, F&& f) {
  const std::size_t n = pool.size();
  if (k > n) return true;
  std::vector<std::size_t> pos(k);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::vector<Vertex> current(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  while (true) {
    if constexpr (std::is_void_v<std::invoke_result_t<F&, std::span<const Vertex>>>) {
      f(std::span<const Vertex>(current));
    } else {
      if (!f(std::span<const Vertex>(current))) return false;
    }
    // Advance the rightmost position that still has room.
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    --i;
    ++pos[i];
    current[i] = pool[pos[i]];
    for (std::size_t j = i + 1; j < k; ++j) {
      pos[j] = pos[j - 1] + 1;
      current[j] = pool[pos[j]];
    }
  }
}

/// Same as above over the vertex range [0, n).
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return true;
  std::vector<Vertex> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
  return for_each_combination(std::span<const Vertex>(pool), k, std::forward<F>(f));
}

/// The vertex range [0, n) as a Subset.
Subset iota_subset(std::size_t n);

bool is_canonical(std::span<const Vertex> s) noexcept;
bool disjoint(std::span<const Vertex> a, std::span<const Vertex> b) noexcept;
bool includes(std::span<const Vertex> outer, std::span<const Vertex> inner) noexcept;
Subset with_vertex(std::span<const Vertex> s, Vertex v);
Subset without_position(std::span<const Vertex> s, std::size_t pos);

/// Colexicographic ranking of k-subsets of [0, n), backed by a Pascal table.
/// rank() is a bijection onto [0, C(n, k)).
class SubsetRanker {
 public:
  SubsetRanker(std::size_t n, std::size_t k);

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t rank(std::span<const Vertex> sorted) const noexcept;
  Subset unrank(std::uint64_t r) const;

 private:
  std::uint64_t choose(std::size_t a, std::size_t b) const noexcept {
    return b > a ? 0 : table_[a * (k_ + 1) + b];
  }

  std::size_t n_;
  std::size_t k_;
  std::uint64_t count_;
  std::vector<std::uint64_t> table_;
};

}  // namespace hyperclique
