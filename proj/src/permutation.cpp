#include "wichtel/permutation.hpp"

#include <numeric>

namespace wichtel {

Permutation identity_permutation(std::size_t n) {
  Permutation p;
  p.mapping.resize(n);
  std::iota(p.mapping.begin(), p.mapping.end(), 0u);
  return p;
}

bool is_valid_permutation(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  for (auto v : p.mapping) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

CycleType cycle_type(const Permutation& p) {
  const std::size_t n = p.size();
  CycleType type;
  type.n = n;
  type.counts.assign(n, 0);
  std::vector<bool> visited(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    std::size_t j = i;
    do {
      visited[j] = true;
      j = p.mapping[j];
      ++len;
    } while (j != i);
    ++type.counts[len - 1];
  }
  return type;
}

std::size_t count_fixed_points(const Permutation& p) {
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.mapping[i] == i) ++fixed;
  }
  return fixed;
}

std::size_t count_two_cycles(const Permutation& p) {
  std::size_t twos = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t j = p.mapping[i];
    if (j > i && p.mapping[j] == i) ++twos;
  }
  return twos;
}

bool is_derangement(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.mapping[i] == i) return false;
  }
  return true;
}

}  // namespace wichtel
