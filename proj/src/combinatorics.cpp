#include "rackmr/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rackmr {

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("binomial: negative argument");
  }
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: r holds C(n-k+i-1, i-1) before the update.
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      throw std::overflow_error("binomial: result exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(r);
}

void for_each_combination(int n, int k,
                          const std::function<void(std::span<const int>)>& visit) {
  if (n < 0 || k < 0 || k > n) {
    return;
  }
  if (k == 0) {
    visit({});
    return;
  }
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    visit(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (k - 1 - i)) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> all;
  for_each_combination(n, k, [&](std::span<const int> c) {
    all.emplace_back(c.begin(), c.end());
  });
  return all;
}

std::int64_t combination_rank(std::span<const int> subset, int n) {
  const int k = static_cast<int>(subset.size());
  int prev = 0;
  std::int64_t rank = 1;
  for (int i = 0; i < k; ++i) {
    const int cur = subset[static_cast<std::size_t>(i)];
    if (cur <= prev || cur > n) {
      throw std::invalid_argument("combination_rank: subset must be sorted and within [1,n]");
    }
    for (int v = prev + 1; v < cur; ++v) {
      rank += binomial(n - v, k - 1 - i);
    }
    prev = cur;
  }
  return rank;
}

}  // namespace rackmr
