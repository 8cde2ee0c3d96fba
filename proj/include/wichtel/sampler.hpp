#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>

#include "wichtel/distribution.hpp"
#include "wichtel/permutation.hpp"

namespace wichtel {

// Seeded Monte Carlo over uniform random derangements. A proposal is a
// uniform permutation from an unbiased Fisher-Yates shuffle; proposals
// with a fixed point are discarded, which conditions the uniform law on
// the derangement event and is therefore exactly uniform over
// derangements. Acceptance probability is F_n/n! -> 1/e.
//
// Reproducibility contract: the generator is std::mt19937_64 (fully
// specified by the standard) and bounded draws use threshold rejection,
// so a report is a pure function of (n, trials, seed) on any platform.
// Trials are processed in fixed chunks of kSamplerChunk; chunk c draws
// from its own generator seeded with stream_seed(seed, c). The merged
// histogram is a sum over chunks, so the parallel pass is bit-identical
// to the serial one for any thread count.

inline constexpr std::uint64_t kSamplerChunk = 1 << 16;

/// splitmix64 of (master + (c+1) * golden gamma); the documented
/// derivation of per-chunk generator seeds.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t chunk);

/// Unbiased draw from {0,...,bound-1} via threshold rejection.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound);

/// Unbiased Fisher-Yates shuffle of the identity.
Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

/// Uniform random derangement by rejection. `rejected`, when given,
/// accumulates the number of discarded proposals.
/// Throws std::domain_error for n < 2.
Permutation sample_derangement(std::size_t n, std::mt19937_64& rng,
                               std::uint64_t* rejected = nullptr);

struct SampleReport {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::map<std::size_t, std::uint64_t> histogram;  // k -> count, zeros omitted
  std::uint64_t rejected = 0;  // non-derangement proposals discarded
  double elapsed_seconds = 0;  // excluded from the determinism contract

  std::uint64_t histogram_at(std::size_t k) const;
  /// trials / (trials + rejected)
  double acceptance_rate() const;
};

/// Draws `trials` derangements and tallies their 2-cycle counts.
/// Parallelized over chunks when OpenMP is available.
SampleReport monte_carlo_histogram(std::size_t n, std::uint64_t trials,
                                   std::uint64_t seed);

/// Single-threaded reference; bit-identical to monte_carlo_histogram.
SampleReport monte_carlo_histogram_serial(std::size_t n, std::uint64_t trials,
                                          std::uint64_t seed);

/// max_k |histogram[k]/trials - pmf[k]|.
/// Throws std::invalid_argument if report.n != dist.n.
double compare_empirical(const SampleReport& report,
                         const PairCountDistribution& dist);

}  // namespace wichtel
