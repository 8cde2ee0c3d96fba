#pragma once

#include <algorithm>
#include <cstddef>
#include <map>

#include "wichtel/errors.hpp"
#include "wichtel/exact.hpp"
#include "wichtel/permutation.hpp"

namespace wichtel {

inline constexpr std::size_t kOracleCapDefault = 9;

/// Hard upper bound on the exhaustive cap (10! = 3.6M permutations).
inline constexpr std::size_t kOracleCapLimit = 10;

/// Effective exhaustive-enumeration cap: WICHTEL_ORACLE_CAP when set,
/// kOracleCapDefault otherwise. Throws CapExceeded if the override asks
/// for more than kOracleCapLimit.
std::size_t oracle_cap();

/// Classification of all of S_n obtained by one exhaustive pass.
struct OracleCensus {
  std::size_t n = 0;
  ExactCount total;            // n!
  ExactCount derangements;     // no fixed points
  ExactCount no_short_cycles;  // all cycle lengths >= 3

  /// k -> number of derangements with exactly k 2-cycles; zero entries
  /// are omitted. Values sum to `derangements`.
  std::map<std::size_t, ExactCount> pair_histogram;

  /// Tally of every cycle type occurring in S_n; values sum to n!.
  std::map<CycleType, ExactCount> type_counts;

  /// pair_histogram lookup that reads omitted entries as zero.
  ExactCount histogram_at(std::size_t k) const;

  bool operator==(const OracleCensus&) const = default;
};

/// Visits each of the n! permutations exactly once, in lexicographic
/// order of the mapping sequence. The Permutation passed to fn is a
/// reused buffer; copy it if it must outlive the call.
template <class F>
void for_each_permutation(std::size_t n, std::size_t cap, F&& fn) {
  if (n > cap) {
    throw CapExceeded("exhaustive enumeration of " + std::to_string(n) +
                      "! permutations exceeds cap " + std::to_string(cap));
  }
  Permutation p = identity_permutation(n);
  do {
    fn(static_cast<const Permutation&>(p));
  } while (std::next_permutation(p.mapping.begin(), p.mapping.end()));
}

template <class F>
void for_each_permutation(std::size_t n, F&& fn) {
  for_each_permutation(n, oracle_cap(), std::forward<F>(fn));
}

/// Single-threaded census pass; the reference the parallel kernel is
/// checked against.
OracleCensus oracle_census_serial(std::size_t n, std::size_t cap);

/// Census pass, parallelized over lexicographic prefix blocks when
/// OpenMP is available. Bit-identical to oracle_census_serial.
OracleCensus oracle_census(std::size_t n, std::size_t cap);

OracleCensus oracle_census_serial(std::size_t n);
OracleCensus oracle_census(std::size_t n);

}  // namespace wichtel
