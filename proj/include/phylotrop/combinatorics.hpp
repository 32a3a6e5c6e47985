#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phylotrop {

/// A sorted set of 1-based leaf labels.
using LeafSet = std::vector<int>;

std::uint64_t binomial(int n, int k);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<LeafSet> k_subsets(int n, int k);

/// Position of a sorted k-subset of {1..n} in the order of k_subsets(n, k).
std::size_t subset_rank(int n, std::span<const int> subset);

/// Advances a sorted k-subset of {1..n} to its lexicographic successor.
/// Returns false after the last subset.
bool next_subset(int n, std::vector<int>& subset);

}  // namespace phylotrop
