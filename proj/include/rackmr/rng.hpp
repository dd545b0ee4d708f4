#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace rackmr {

// All randomness in the project keeps to mt19937_64 plus the helpers
// below, so seeded runs reproduce byte-for-byte on any platform
// (std::uniform_int_distribution is implementation-defined; these are not).

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling, unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

template <typename T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

// Random permutation of {1..n}.
inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  shuffle_in_place(p, rng);
  return p;
}

}  // namespace rackmr
