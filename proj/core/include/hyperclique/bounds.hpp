#pragma once

#include <cstdint>

#include "hyperclique/density.hpp"

namespace hyperclique {

// Closed-form evaluators. Arguments outside [0, 1] are rejected rather than
// clamped.

double theorem1_bound(double alpha);
double chordal_bound(double alpha);
double beta_recursion(double alpha, int k, int m);
std::uint64_t asymptotic_exponent(int k, int m);
double kalai_bound(double alpha, int d);
double lemma31_lower_bound(std::uint64_t s, std::uint64_t omega, int k, int m);

struct BoundReport {
  Density alpha;
  int k = 2;
  int m = 2;
  int d = 1;
  double theorem1 = 0.0;
  double chordal = 0.0;
  double beta_recursive = 0.0;
  double kalai = 0.0;
  std::uint64_t exponent = 0;
};

BoundReport bound_report(Density alpha, int k, int m, int d);

// Exact comparisons on rational inputs, by squaring the irrational side away.

/// ratio >= (1 - sqrt(1 - alpha))^2
bool meets_theorem1(Density alpha, Density ratio);
/// ratio >= 1 - sqrt(1 - alpha)
bool meets_chordal(Density alpha, Density ratio);
/// ratio >= 1 - (1 - alpha)^(1/(d+1))
bool meets_kalai(Density alpha, Density ratio, int d);

}  // namespace hyperclique
