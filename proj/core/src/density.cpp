#include "hyperclique/density.hpp"

#include <charconv>
#include <numeric>

#include "hyperclique/combinatorics.hpp"
#include "hyperclique/errors.hpp"

namespace hyperclique {

Density::Density(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw ArgumentError("density denominator must be positive");
  const std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Density Density::of(std::uint64_t count, std::uint64_t total) {
  if (total == 0) return Density(1, 1);
  return Density(count, total);
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ArgumentError("not a nonnegative rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Density Density::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return Density(parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text));
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 18) throw ArgumentError("too many decimal places: '" + std::string(text) + "'");
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, text);
    const std::uint64_t f = frac.empty() ? 0 : parse_u64(frac, text);
    return Density(w * scale + f, scale);
  }
  return Density(parse_u64(text, text), 1);
}

double Density::value() const noexcept {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Density::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Density& a, const Density& b) noexcept {
  const UInt128 lhs = static_cast<UInt128>(a.num_) * b.den_;
  const UInt128 rhs = static_cast<UInt128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace hyperclique
