#include "hyperclique/combinatorics.hpp"

#include <algorithm>
#include <string>

#include "hyperclique/errors.hpp"

namespace hyperclique {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  UInt128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

double ext_binom(double x, int k) {
  if (k <= 0) throw ArgumentError("ext_binom: k must be positive, got " + std::to_string(k));
  if (x < static_cast<double>(k - 1)) return 0.0;
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= (x - i) / (i + 1);
  return acc;
}

Subset iota_subset(std::size_t n) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Vertex>(i);
  return s;
}

bool is_canonical(std::span<const Vertex> s) noexcept {
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>{}) == s.end();
}

bool disjoint(std::span<const Vertex> a, std::span<const Vertex> b) noexcept {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

bool includes(std::span<const Vertex> outer, std::span<const Vertex> inner) noexcept {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

Subset with_vertex(std::span<const Vertex> s, Vertex v) {
  Subset out;
  out.reserve(s.size() + 1);
  auto pos = std::lower_bound(s.begin(), s.end(), v);
  out.insert(out.end(), s.begin(), pos);
  out.push_back(v);
  out.insert(out.end(), pos, s.end());
  return out;
}

Subset without_position(std::span<const Vertex> s, std::size_t pos) {
  Subset out;
  out.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != pos) out.push_back(s[i]);
  return out;
}

SubsetRanker::SubsetRanker(std::size_t n, std::size_t k)
    : n_(n), k_(k), count_(binomial(n, k)), table_((n + 1) * (k + 1), 0) {
  if (count_ == kSaturated)
    throw SizeRefusal("C(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") does not fit in 64 bits");
  for (std::size_t a = 0; a <= n; ++a) {
    table_[a * (k + 1)] = 1;
    for (std::size_t b = 1; b <= std::min(a, k); ++b) {
      const std::uint64_t up = table_[(a - 1) * (k + 1) + b - 1];
      const std::uint64_t left = b <= a - 1 ? table_[(a - 1) * (k + 1) + b] : 0;
      // Saturated entries exceed every rank, which is all unrank() needs.
      table_[a * (k + 1) + b] = up > kSaturated - left ? kSaturated : up + left;
    }
  }
}

std::uint64_t SubsetRanker::rank(std::span<const Vertex> sorted) const noexcept {
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j) r += choose(sorted[j], j + 1);
  return r;
}

Subset SubsetRanker::unrank(std::uint64_t r) const {
  Subset out(k_);
  std::size_t hi = n_;
  for (std::size_t j = k_; j > 0; --j) {
    // Largest c < hi with C(c, j) <= r.
    std::size_t c = j - 1;
    while (c + 1 < hi && choose(c + 1, j) <= r) ++c;
    out[j - 1] = static_cast<Vertex>(c);
    r -= choose(c, j);
    hi = c;
  }
  return out;
}

}  // namespace hyperclique
