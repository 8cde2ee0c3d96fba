#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wichtel {

/// A bijection on {0,...,n-1}. mapping[i] is the image of i.
/// The empty mapping is the unique permutation of zero elements.
struct Permutation {
  std::vector<std::uint32_t> mapping;

  std::size_t size() const { return mapping.size(); }
  bool operator==(const Permutation&) const = default;
};

/// Cycle-structure vector (a_1,...,a_n): counts[i-1] is the number of
/// cycles of length i. Always satisfies sum_i i*a_i = n.
struct CycleType {
  std::size_t n = 0;
  std::vector<std::uint32_t> counts;

  auto operator<=>(const CycleType&) const = default;
};

Permutation identity_permutation(std::size_t n);

/// True iff mapping is a bijection on {0,...,n-1}.
bool is_valid_permutation(const Permutation& p);

/// Decomposes p into disjoint cycles and tallies their lengths.
CycleType cycle_type(const Permutation& p);

std::size_t count_fixed_points(const Permutation& p);

/// Number of i < j with p[i] = j and p[j] = i.
std::size_t count_two_cycles(const Permutation& p);

/// True iff p has no fixed point. Vacuously true for n = 0.
bool is_derangement(const Permutation& p);

}  // namespace wichtel
