#pragma once

#include <cstddef>
#include <vector>

#include "wichtel/exact.hpp"

namespace wichtel {

// Exact law of the pair count X_n: the number of 2-cycles of a uniformly
// drawn derangement of n elements. All finite-n probabilities are exact
// rationals; floating point appears only at the output boundary and in
// Poisson-limit quantities.

/// Exact pmf of X_n over k = 0..floor(n/2), with first two moments.
struct PairCountDistribution {
  std::size_t n = 0;
  std::vector<ExactRatio> pmf;  // pmf[k] = P(X_n = k)
  ExactRatio mean;
  ExactRatio second_moment;
};

/// Throws std::domain_error for n < 2 (no derangement exists for n = 1,
/// and the n = 0 case carries no information).
PairCountDistribution pair_distribution(std::size_t n);

/// P(X_n >= k), exact. k = 0 gives exactly 1; k > floor(n/2) exactly 0.
ExactRatio prob_at_least(std::size_t n, std::size_t k);

/// Exact mean of X_n; approaches 1/2 as n grows.
ExactRatio mean_pair_count(std::size_t n);

/// Limiting pmf (1/2)^k e^{-1/2} / k!.
double poisson_half_pmf(std::size_t k);

/// Limiting tail 1 - sum_{j<k} poisson_half_pmf(j).
double asymptotic_at_least(std::size_t k);

/// Total variation distance between the exact pmf of X_n and the
/// Poisson(1/2) limit: half the L1 distance, with the Poisson tail
/// truncated once it drops below 1e-12.
double total_variation_to_poisson(std::size_t n);

/// One row of the convergence table; each float is the correctly
/// rounded value of its exact counterpart.
struct ConvergenceRow {
  std::size_t n = 0;
  double prob_at_least_1 = 0;
  double prob_at_least_3 = 0;
  double tv_to_poisson = 0;
  double mean = 0;
};

/// Rows for n = n_min..n_max; requires 2 <= n_min <= n_max.
std::vector<ConvergenceRow> convergence_table(std::size_t n_min, std::size_t n_max);

}  // namespace wichtel
