#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hyperclique {

/// Exact nonnegative rational, kept in lowest terms. Ordering uses 128-bit
/// cross multiplication.
class Density {
 public:
  Density() = default;
  Density(std::uint64_t numerator, std::uint64_t denominator);

  /// count / total, with the vacuous 0/0 case read as 1 (every one of zero
  /// possible tuples is present).
  static Density of(std::uint64_t count, std::uint64_t total);

  /// Accepts "p/q", an integer, or a finite decimal such as "0.75".
  static Density parse(std::string_view text);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  double value() const noexcept;
  std::string str() const;

  bool is_zero() const noexcept { return num_ == 0; }

  friend bool operator==(const Density&, const Density&) = default;
  friend std::strong_ordering operator<=>(const Density& a, const Density& b) noexcept;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace hyperclique
