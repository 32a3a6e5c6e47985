#pragma once

#include "phylotrop/column_reduction.hpp"
#include "phylotrop/puiseux.hpp"
#include "phylotrop/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phylotrop {

/// Generic coefficients a_j(e), one per edge and per j in 1..n-2. Edges are
/// identified by their lower endpoint. Entries are nonzero integers drawn
/// uniformly from [-2^31, 2^31].
class CoefficientTable {
public:
  CoefficientTable(std::uint64_t seed, int indices, std::vector<std::vector<Integer>> by_edge)
      : seed_(seed), indices_(indices), by_edge_(std::move(by_edge)) {}

  std::uint64_t seed() const { return seed_; }
  int indices() const { return indices_; }
  /// j is 1-based.
  const Integer& at(NodeId edge, int j) const { return by_edge_.at(edge.index).at(j - 1); }
  std::size_t entry_count() const;

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

private:
  std::uint64_t seed_;
  int indices_;
  std::vector<std::vector<Integer>> by_edge_;  // empty row for the root
};

CoefficientTable sample_coefficients(const UltrametricTree& tree, std::uint64_t seed);

/// The n×n matrix whose columns are indexed by leaves: row 1 is all ones,
/// row 2 holds x_i^(1), row 3 its square, and rows 4..n hold x_i^(2..n-2),
/// where x_i^(j) sums a_j(e)·t^(-h(e)) over the edges e from the root to
/// leaf i and h(e) is the height of the upper endpoint of e. Requires n ≥ 4.
PuiseuxMatrix build_matrix(const UltrametricTree& tree, const CoefficientTable& coeffs);

/// Internal nodes v_1..v_{n-1} (root last), the injective α: v_i ↦ a_i with
/// a_i below v_i, and for each i the unique leaf b_i below v_i outside
/// {a_1, ..., a_i}.
struct LeafAssignment {
  std::vector<NodeId> order;
  std::vector<int> alpha;
  std::vector<int> b;
  friend bool operator==(const LeafAssignment&, const LeafAssignment&) = default;
};

/// Sweeps v_1..v_{n-1}; when a node is reached exactly two leaves below it
/// are still free, and the smaller label becomes a_i.
LeafAssignment construct_alpha(const UltrametricTree& tree);

/// Derives the b_i for a caller-chosen order and α. Throws
/// std::invalid_argument when some b_i is not unique.
LeafAssignment assignment_from_alpha(const UltrametricTree& tree, std::vector<NodeId> order,
                                     std::vector<int> alpha);

/// nullopt when the assignment satisfies every invariant, else a reason.
std::optional<std::string> check_assignment(const UltrametricTree& tree, const LeafAssignment& assignment);
inline bool validate_assignment(const UltrametricTree& tree, const LeafAssignment& assignment) {
  return !check_assignment(tree, assignment);
}

/// [(a_1,b_1), ..., (a_{n-1},b_{n-1})] in application order.
ColumnReductionSeq reduction_from_alpha(const LeafAssignment& assignment);

struct ClaimsReport {
  bool c1 = true;  // M*[1, a_i] = 0
  bool c2 = true;  // val M*[3, a_i] = -d - h(v_i)
  bool c3 = true;  // val M*[j, a_i] = -h(v_i) for j ∉ {1, 3}
  bool c4 = true;  // row 1 is the constant 1 at b_{n-1} and zero elsewhere
  std::vector<std::string> failures;
  bool all() const { return c1 && c2 && c3 && c4; }
};

ClaimsReport check_reduced_claims(const PuiseuxMatrix& reduced, const UltrametricTree& tree,
                                  const LeafAssignment& assignment);

struct HeightSum {
  Rational lhs;  // sum of internal node heights
  Rational rhs;  // total weight - d
  bool ok;
};

/// Holds for every ultrametric tree with n ≥ 2.
HeightSum height_sum_identity(const UltrametricTree& tree);

/// One coefficient draw and everything computed from it.
struct VerificationTrial {
  CoefficientTable coefficients;
  LeafAssignment assignment;
  PuiseuxMatrix matrix;
  PuiseuxMatrix reduced;
  PuiseuxPoly det;
  ClaimsReport claims;
};

VerificationTrial run_trial(const UltrametricTree& tree, std::uint64_t seed);

struct VerificationReport {
  int n = 0;
  Rational d;
  Rational total_weight;
  Valuation valuation;
  bool verdict = false;  // valuation == -total_weight
  bool height_sum_ok = false;
  ClaimsReport claims;
  std::uint64_t seed = 0;        // as requested
  int resamples = 0;
  std::uint64_t trial_seed = 0;  // seed of the reported trial
};

/// Seed of the k-th resample (k = 0 is the requested seed itself).
std::uint64_t resample_seed(std::uint64_t seed, int k);

/// Checks val(det M) = -D. A trial whose verdict or claims fail can only be
/// a non-generic coefficient draw; it is redrawn with resample_seed up to
/// max_resamples times. A report that still fails afterwards is a
/// counterexample candidate. Throws std::invalid_argument for n < 4.
VerificationReport verify(const UltrametricTree& tree, std::uint64_t seed, int max_resamples = 3);

}  // namespace phylotrop
