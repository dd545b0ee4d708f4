#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rackmr {

// Exact n-choose-k. Throws std::overflow_error once the value no longer
// fits in 64 bits (any k with n <= 64 fits).
std::int64_t binomial(int n, int k);

// Visits every k-subset of {1..n} in lexicographic order.
void for_each_combination(int n, int k,
                          const std::function<void(std::span<const int>)>& visit);

std::vector<std::vector<int>> combinations(int n, int k);

// 1-based lexicographic rank of a sorted k-subset of {1..n}.
// Inverse of the enumeration order used by for_each_combination.
std::int64_t combination_rank(std::span<const int> subset, int n);

}  // namespace rackmr
