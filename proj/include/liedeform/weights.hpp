#ifndef LIEDEFORM_WEIGHTS_HPP
#define LIEDEFORM_WEIGHTS_HPP

#include <optional>
#include <vector>

#include "liedeform/ideals.hpp"

namespace liedeform {

// Diagonal weight data for the type A degeneration: integer z solving the
// partition-indexed strict inequality system, scaled into (n+1)Z, plus the
// balanced diagonal exponent vector w with w_j - w_{j+h} equal to the
// window sums of z.
struct WeightSolution {
  Partition mu;
  std::vector<long> z;  // length n
  std::vector<long> w;  // length n+1, sum zero
};

// row index of the unique staircase cell at difference h (1-based)
int staircase_row(const Partition& mu, int h);

WeightSolution solve_weight_system(const Partition& mu);

// exhaustive check of every constraint; returns a violated (h, j) pair or
// nullopt when z is a valid solution
std::optional<std::pair<int, int>> weight_system_violation(const Partition& mu,
                                                           const std::vector<Rational>& z);

}  // namespace liedeform

#endif
