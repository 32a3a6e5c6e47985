#include "phylotrop/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace phylotrop {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

bool next_subset(int n, std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i + 1) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

std::vector<LeafSet> k_subsets(int n, int k) {
  std::vector<LeafSet> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  LeafSet s(k);
  std::iota(s.begin(), s.end(), 1);
  do {
    out.push_back(s);
  } while (next_subset(n, s));
  return out;
}

std::size_t subset_rank(int n, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  std::size_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    if (subset[i] <= prev || subset[i] > n)
      throw std::invalid_argument("subset_rank: subset not sorted or out of range");
    // Subsets sharing the prefix but with a smaller element at position i.
    for (int v = prev + 1; v < subset[i]; ++v) rank += binomial(n - v, k - i - 1);
    prev = subset[i];
  }
  return rank;
}

}  // namespace phylotrop
