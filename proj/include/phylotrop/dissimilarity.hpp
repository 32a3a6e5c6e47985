#pragma once

#include "phylotrop/combinatorics.hpp"
#include "phylotrop/rational.hpp"
#include "phylotrop/tree.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace phylotrop {

/// Total weight of the smallest subtree containing the leaves in `sigma`:
/// an edge counts when both sides of it hold a leaf of sigma.
/// Requires |sigma| ≥ 2 and known labels; throws std::invalid_argument.
Rational steiner_weight(const Tree& tree, std::span<const int> sigma);

/// D(m, T): one entry per m-subset of {1..n}, lexicographic.
struct DissimilarityVector {
  int n = 0;
  int m = 0;
  std::vector<LeafSet> subsets;
  std::vector<Rational> values;

  const Rational& at(std::span<const int> sigma) const;
};

DissimilarityVector dissimilarity_vector(const Tree& tree, int m);

/// Symmetric, nonnegative, zero diagonal; labels are 1-based.
class DistanceMatrix {
public:
  /// Throws std::invalid_argument if `rows` is not a valid distance matrix.
  explicit DistanceMatrix(std::vector<std::vector<Rational>> rows);

  int size() const { return n_; }
  const Rational& operator()(int i, int j) const { return entries_.at((i - 1) * n_ + (j - 1)); }

private:
  int n_ = 0;
  std::vector<Rational> entries_;
};

/// Pairwise leaf path weights.
DistanceMatrix leaf_distances(const Tree& tree);

struct UltrametricWitness {
  int x, y, z;  // d(x,z) > max(d(x,y), d(y,z))
};

/// Returns the lexicographically first violating triple, or nullopt when
/// the matrix is ultrametric.
std::optional<UltrametricWitness> find_ultrametric_violation(const DistanceMatrix& dm);
inline bool is_ultrametric(const DistanceMatrix& dm) { return !find_ultrametric_violation(dm); }

class NotUltrametricError : public std::runtime_error {
public:
  NotUltrametricError(const std::string& what, std::optional<UltrametricWitness> witness)
      : std::runtime_error(what), witness_(witness) {}
  const std::optional<UltrametricWitness>& witness() const { return witness_; }

private:
  std::optional<UltrametricWitness> witness_;
};

/// Binary equidistant tree whose leaf distances equal `dm` exactly, built by
/// closest-pair agglomeration (ties go to the clusters with the smallest
/// labels). Merges of more than two clusters at one height are resolved with
/// zero-weight edges. Throws NotUltrametricError.
UltrametricTree realize_ultrametric(const DistanceMatrix& dm);

}  // namespace phylotrop
