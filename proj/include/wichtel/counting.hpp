#pragma once

#include <cstddef>
#include <vector>

#include "wichtel/exact.hpp"
#include "wichtel/permutation.hpp"

namespace wichtel {

// Exact closed-form and recursive counts of fixed-point-free permutations
// classified by 2-cycle content. Everything here is integer/rational
// arithmetic; no floating point. All functions are pure; the memoization
// caches behind factorial / derangement / partition / g_ge3 lookups are
// mutex-protected and never evicted, so concurrent callers are safe.

ExactCount factorial(std::size_t n);

/// Number of derangements of n elements via the inclusion-exclusion sum
/// sum_{k=0..n} (-1)^k n!/k!.
ExactCount derangement_count_sum(std::size_t n);

/// Same count via D_n = (n-1)(D_{n-1} + D_{n-2}), D_0 = 1, D_1 = 0.
/// Kept as an independent cross-check of the sum form.
ExactCount derangement_count_recurrence(std::size_t n);

/// Same count as the integer nearest to n!/e, for n >= 2. 1/e is
/// bracketed between consecutive alternating partial sums of
/// sum (-1)^k/k!; both bracket endpoints of n!/e + 1/2 must floor to the
/// same integer or the bracket is tightened. No floating point involved.
/// Throws std::domain_error for n < 2.
ExactCount derangement_count_rounding(std::size_t n);

/// Number of permutations of cycle type a:
/// n! / (prod_i i^{a_i} * prod_i a_i!). Evaluated as an exact rational;
/// the division must come out integral. Throws std::invalid_argument if
/// sum_i i*a_i != n.
ExactCount count_of_type(const CycleType& a);

/// All cycle types with no fixed point and at least one 2-cycle,
/// ordered by their partition read smallest-part-first ((2,2,3) before
/// (2,5)). Empty for n < 2 and n = 3.
std::vector<CycleType> enumerate_pair_types(std::size_t n);

/// Sum of count_of_type over enumerate_pair_types(n): the number of
/// derangements of n elements containing at least one 2-cycle.
ExactCount pair_count_typesum(std::size_t n);

/// Partition function p_k(n): partitions of n into at most k parts.
ExactCount partitions_at_most(std::size_t k, std::size_t n);

enum class TypeCountVariant {
  /// The printed closed form sum_{k=2..n/2} p_{k-1}(n-2k) + 1. Exceeds
  /// the true count by one for every n >= 4; see pair_type_count.
  paper,
  /// Ground truth: the number of types enumerate_pair_types(n) yields.
  enumerated,
};

/// Number of cycle types contributing to pair_count_typesum(n), n >= 2.
/// The two variants disagree by exactly one for n >= 4: the closed form
/// carries a "+1" that is only correct at n = 2, where the bare sum is
/// empty and the single type (0,1) must be counted. The identity that
/// actually holds is
///   enumerated(n) = sum_{k=2..n/2} p_{k-1}(n-2k) + [n = 2].
ExactCount pair_type_count(std::size_t n, TypeCountVariant variant);

/// Derangements of n elements with at least one 2-cycle, via the
/// recursion |P_n| = (n-1)(|P_{n-1}| + (n-2)|P_{n-3}| + (-1)^n) for
/// n >= 4. Base values at n = 2, 3 are obtained by evaluating the
/// first-form recursion (see detail::pair_count_rec1) directly.
ExactCount pair_count_recurrence(std::size_t n);

/// Number of permutations of n elements whose cycle lengths are all
/// >= 3, as the alternating double sum
///   n! sum_{k=0..n} (-1)^k sum_{j=0..k/2} (-1)^j / ((k-2j)! j! 2^j).
/// The rational sum times n! must reduce to an integer (asserted).
/// g_ge3(0) = 1, g_ge3(1) = g_ge3(2) = 0.
ExactCount g_ge3(std::size_t n);

/// Derangements with at least one 2-cycle as
/// derangement_count_sum(n) - g_ge3(n). Third route to the same count.
ExactCount pair_count_subtraction(std::size_t n);

/// Derangements of n elements with exactly k 2-cycles:
///   n! / ((n-2k)! 2^k k!) * g_ge3(n-2k).
/// Throws std::domain_error when k > floor(n/2): out-of-range k is a
/// caller bug, unlike in-range k whose count happens to be zero.
ExactCount exact_pair_k_count(std::size_t n, std::size_t k);

namespace detail {

/// First-form recursion
///   |P_n| = sum_{k=2..n-3} |P_k| (n-1)!/k! + (n-1) |F_{n-2}|,
/// valid for n >= 2. Seeds pair_count_recurrence at n = 2, 3 and is
/// exercised against the simplified recursion in tests.
ExactCount pair_count_rec1(std::size_t n);

}  // namespace detail

}  // namespace wichtel
