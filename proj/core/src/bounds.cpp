#include "hyperclique/bounds.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperclique/combinatorics.hpp"
#include "hyperclique/errors.hpp"

namespace hyperclique {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void require_unit(double alpha, const char* op) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw ArgumentError(std::string(op) + ": alpha must lie in [0, 1], got " + std::to_string(alpha));
}

void require_m_k(int k, int m, const char* op) {
  if (k < 2 || m < k)
    throw ArgumentError(std::string(op) + ": need m >= k >= 2, got k = " + std::to_string(k) +
                        ", m = " + std::to_string(m));
}

void require_unit(Density alpha, const char* op) {
  if (alpha > Density(1, 1))
    throw ArgumentError(std::string(op) + ": alpha must lie in [0, 1], got " + alpha.str());
}

}  // namespace

double theorem1_bound(double alpha) {
  require_unit(alpha, "theorem1_bound");
  const double r = 1.0 - std::sqrt(1.0 - alpha);
  return r * r;
}

double chordal_bound(double alpha) {
  require_unit(alpha, "chordal_bound");
  return 1.0 - std::sqrt(1.0 - alpha);
}

double beta_recursion(double alpha, int k, int m) {
  require_m_k(k, m, "beta_recursion");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ArgumentError("beta_recursion: alpha must lie in (0, 1], got " + std::to_string(alpha));
  const double scale = 12.0 * k * m;
  double a = alpha;
  for (int i = 1; i < m; ++i) a = std::pow(a / scale, k);
  return a;
}

std::uint64_t asymptotic_exponent(int k, int m) {
  require_m_k(k, m, "asymptotic_exponent");
  std::uint64_t e = 1;
  for (int i = 1; i < m; ++i) {
    if (e > kSaturated / static_cast<std::uint64_t>(k))
      throw ArgumentError("asymptotic_exponent: k^(m-1) overflows 64 bits");
    e *= static_cast<std::uint64_t>(k);
  }
  return e;
}

double kalai_bound(double alpha, int d) {
  require_unit(alpha, "kalai_bound");
  if (d < 1) throw ArgumentError("kalai_bound: d must be at least 1");
  return 1.0 - std::pow(1.0 - alpha, 1.0 / (d + 1));
}

double lemma31_lower_bound(std::uint64_t s, std::uint64_t omega, int k, int m) {
  require_m_k(k, m, "lemma31_lower_bound");
  if (s <= omega) return 0.0;
  const double x = static_cast<double>(s - omega) / k;
  return ext_binom(x, k) / static_cast<double>(binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k)));
}

BoundReport bound_report(Density alpha, int k, int m, int d) {
  require_unit(alpha, "bound_report");
  BoundReport r;
  r.alpha = alpha;
  r.k = k;
  r.m = m;
  r.d = d;
  const double a = alpha.value();
  r.theorem1 = theorem1_bound(a);
  r.chordal = chordal_bound(a);
  r.beta_recursive = alpha.is_zero() ? 0.0 : beta_recursion(a, k, m);
  r.kalai = kalai_bound(a, d);
  r.exponent = asymptotic_exponent(k, m);
  return r;
}

// alpha = p/q, ratio = a/b throughout.

bool meets_theorem1(Density alpha, Density ratio) {
  require_unit(alpha, "meets_theorem1");
  // (1 - sqrt(1-alpha))^2 <= r  <=>  2 sqrt(1-alpha) >= 2 - alpha - r.
  const BigInt p = alpha.numerator(), q = alpha.denominator();
  const BigInt a = ratio.numerator(), b = ratio.denominator();
  const BigInt rhs = 2 * q * b - p * b - a * q;  // (2 - alpha - r) * q * b
  if (rhs <= 0) return true;
  // 4 (1-alpha) >= (2 - alpha - r)^2, scaled by q^2 b^2.
  return 4 * (q - p) * q * b * b >= rhs * rhs;
}

bool meets_chordal(Density alpha, Density ratio) {
  require_unit(alpha, "meets_chordal");
  // 1 - sqrt(1-alpha) <= r  <=>  sqrt(1-alpha) >= 1 - r.
  const BigInt p = alpha.numerator(), q = alpha.denominator();
  const BigInt a = ratio.numerator(), b = ratio.denominator();
  const BigInt rhs = b - a;
  if (rhs <= 0) return true;
  return (q - p) * b * b >= rhs * rhs * q;
}

bool meets_kalai(Density alpha, Density ratio, int d) {
  require_unit(alpha, "meets_kalai");
  if (d < 1) throw ArgumentError("meets_kalai: d must be at least 1");
  // 1 - (1-alpha)^(1/(d+1)) <= r  <=>  (1-alpha) >= (1 - r)^(d+1) when r < 1.
  const BigInt p = alpha.numerator(), q = alpha.denominator();
  const BigInt a = ratio.numerator(), b = ratio.denominator();
  const BigInt rhs = b - a;
  if (rhs <= 0) return true;
  const BigInt lhs_scaled = (q - p) * boost::multiprecision::pow(b, static_cast<unsigned>(d + 1));
  return lhs_scaled >= boost::multiprecision::pow(rhs, static_cast<unsigned>(d + 1)) * q;
}

}  // namespace hyperclique
