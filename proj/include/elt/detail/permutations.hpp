#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace elt {

template <class Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool odd = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) odd = !odd;
    visit(static_cast<const std::vector<std::size_t>&>(perm), odd);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace detail {

/// Calls visit(indices) for every k-subset of {0..n-1}, lexicographically,
/// until visit returns false.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail
}  // namespace elt
