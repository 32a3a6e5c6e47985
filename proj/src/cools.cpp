#include "phylotrop/cools.hpp"

#include "phylotrop/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace phylotrop {

std::size_t CoefficientTable::entry_count() const {
  std::size_t count = 0;
  for (const auto& row : by_edge_) count += row.size();
  return count;
}

CoefficientTable sample_coefficients(const UltrametricTree& ut, std::uint64_t seed) {
  const Tree& tree = ut.tree();
  const int indices = std::max(0, tree.leaf_count() - 2);
  constexpr std::int64_t bound = std::int64_t{1} << 31;
  Rng rng(seed);
  std::vector<std::vector<Integer>> by_edge(tree.node_count());
  for (std::uint32_t v = 0; v < tree.node_count(); ++v) {
    if (NodeId{v} == tree.root()) continue;
    auto& row = by_edge[v];
    row.reserve(indices);
    for (int j = 0; j < indices; ++j) {
      std::int64_t x;
      do {
        x = rng.between(-bound, bound);
      } while (x == 0);
      row.emplace_back(static_cast<long>(x));
    }
  }
  return CoefficientTable(seed, indices, std::move(by_edge));
}

PuiseuxMatrix build_matrix(const UltrametricTree& ut, const CoefficientTable& coeffs) {
  const Tree& tree = ut.tree();
  const int n = tree.leaf_count();
  if (n < 4) throw std::invalid_argument("build_matrix: need at least 4 leaves");
  if (coeffs.indices() != n - 2) throw std::invalid_argument("build_matrix: coefficient table has the wrong size");

  PuiseuxMatrix m(n, n);
  for (int leaf = 1; leaf <= n; ++leaf) {
    const std::size_t col = leaf - 1;
    // x^(j) for j = 1..n-2, accumulated along the path up from the leaf.
    std::vector<std::vector<PuiseuxTerm>> x(n - 2);
    for (NodeId v = tree.leaf(leaf); v != tree.root(); v = *tree.parent(v)) {
      Rational exponent = -ut.height(*tree.parent(v));
      for (int j = 1; j <= n - 2; ++j) x[j - 1].push_back({exponent, coeffs.at(v, j)});
    }
    m.at(0, col) = PuiseuxPoly::constant(1);
    PuiseuxPoly first = PuiseuxPoly::from_terms(std::move(x[0]));
    m.at(2, col) = first * first;
    m.at(1, col) = std::move(first);
    for (int j = 2; j <= n - 2; ++j) m.at(j + 1, col) = PuiseuxPoly::from_terms(std::move(x[j - 1]));
  }
  return m;
}

namespace {

// Leaves below v that are not yet marked.
std::vector<int> free_leaves(const Tree& tree, NodeId v, const std::vector<char>& taken) {
  std::vector<int> out;
  for (int l : tree.leaves_below(v))
    if (!taken[l]) out.push_back(l);
  return out;
}

}  // namespace

LeafAssignment construct_alpha(const UltrametricTree& ut) {
  const Tree& tree = ut.tree();
  LeafAssignment out;
  out.order = internal_node_order(ut);
  std::vector<char> taken(tree.leaf_count() + 1, 0);
  for (NodeId v : out.order) {
    auto free = free_leaves(tree, v, taken);
    if (free.size() != 2) throw std::logic_error("construct_alpha: expected two free leaves below a node");
    out.alpha.push_back(free[0]);
    out.b.push_back(free[1]);
    taken[free[0]] = 1;
  }
  return out;
}

LeafAssignment assignment_from_alpha(const UltrametricTree& ut, std::vector<NodeId> order, std::vector<int> alpha) {
  const Tree& tree = ut.tree();
  if (order.size() != alpha.size()) throw std::invalid_argument("order and alpha differ in length");
  LeafAssignment out{std::move(order), std::move(alpha), {}};
  std::vector<char> taken(tree.leaf_count() + 1, 0);
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    const int a = out.alpha[i];
    if (a < 1 || a > tree.leaf_count()) throw std::invalid_argument("alpha maps to an unknown leaf");
    taken[a] = 1;
    auto free = free_leaves(tree, out.order[i], taken);
    if (free.size() != 1)
      throw std::invalid_argument("b_" + std::to_string(i + 1) + " is not unique (" + std::to_string(free.size()) +
                                  " candidates)");
    out.b.push_back(free[0]);
  }
  return out;
}

std::optional<std::string> check_assignment(const UltrametricTree& ut, const LeafAssignment& as) {
  const Tree& tree = ut.tree();
  const int n = tree.leaf_count();
  const std::size_t count = static_cast<std::size_t>(n - 1);
  if (as.order.size() != count || as.alpha.size() != count || as.b.size() != count)
    return "assignment must cover exactly n-1 internal nodes";

  std::vector<char> seen(tree.node_count(), 0);
  for (NodeId v : as.order) {
    if (v.index >= tree.node_count() || tree.is_leaf(v)) return "order contains a non-internal node";
    if (seen[v.index]) return "order repeats a node";
    seen[v.index] = 1;
  }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (i != j && tree_order_leq(tree, as.order[i], as.order[j]) && j > i)
        return "v_" + std::to_string(i + 1) + " lies above v_" + std::to_string(j + 1) + " but precedes it";

  std::vector<char> taken(n + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const int a = as.alpha[i];
    if (a < 1 || a > n) return "alpha maps v_" + std::to_string(i + 1) + " to an unknown leaf";
    if (taken[a]) return "alpha is not injective at leaf " + std::to_string(a);
    taken[a] = 1;
    if (!tree_order_leq(tree, as.order[i], tree.leaf(a)))
      return "leaf " + std::to_string(a) + " is not below v_" + std::to_string(i + 1);
    auto free = free_leaves(tree, as.order[i], taken);
    if (free.size() != 1 || free[0] != as.b[i]) return "b_" + std::to_string(i + 1) + " is wrong";
  }
  return std::nullopt;
}

ColumnReductionSeq reduction_from_alpha(const LeafAssignment& as) {
  ColumnReductionSeq seq{static_cast<int>(as.alpha.size()) + 1, {}};
  for (std::size_t i = 0; i < as.alpha.size(); ++i) seq.steps.emplace_back(as.alpha[i], as.b[i]);
  return seq;
}

ClaimsReport check_reduced_claims(const PuiseuxMatrix& reduced, const UltrametricTree& ut, const LeafAssignment& as) {
  const std::size_t n = reduced.rows();
  ClaimsReport report;
  auto fail = [&](bool& flag, std::string message) {
    flag = false;
    report.failures.push_back(std::move(message));
  };
  for (std::size_t i = 0; i < as.alpha.size(); ++i) {
    const std::size_t col = as.alpha[i] - 1;
    const Rational& h = ut.height(as.order[i]);
    const std::string where = "column " + std::to_string(as.alpha[i]) + " (v_" + std::to_string(i + 1) + ")";
    if (!reduced.at(0, col).is_zero()) fail(report.c1, "row 1 nonzero at " + where);
    if (reduced.at(2, col).valuation() != Valuation(Rational(-ut.depth() - h)))
      fail(report.c2, "row 3 valuation " + to_string(reduced.at(2, col).valuation()) + " at " + where);
    for (std::size_t row = 1; row < n; ++row) {
      if (row == 2) continue;
      if (reduced.at(row, col).valuation() != Valuation(Rational(-h)))
        fail(report.c3, "row " + std::to_string(row + 1) + " valuation " +
                            to_string(reduced.at(row, col).valuation()) + " at " + where);
    }
  }
  const std::size_t last_b = as.b.empty() ? 0 : as.b.back() - 1;
  for (std::size_t col = 0; col < reduced.cols(); ++col) {
    const bool expect_one = !as.b.empty() && col == last_b;
    const auto& entry = reduced.at(0, col);
    if (expect_one ? entry != PuiseuxPoly::constant(1) : !entry.is_zero())
      fail(report.c4, "row 1 column " + std::to_string(col + 1) + " is " + to_string(entry));
  }
  return report;
}

HeightSum height_sum_identity(const UltrametricTree& ut) {
  Rational lhs = 0;
  for (NodeId v : ut.tree().internal_nodes()) lhs += ut.height(v);
  Rational rhs = total_weight(ut.tree()) - ut.depth();
  bool ok = lhs == rhs;
  return {std::move(lhs), std::move(rhs), ok};
}

VerificationTrial run_trial(const UltrametricTree& ut, std::uint64_t seed) {
  auto coefficients = sample_coefficients(ut, seed);
  auto matrix = build_matrix(ut, coefficients);
  auto assignment = construct_alpha(ut);
  auto reduced = apply_reduction(matrix, reduction_from_alpha(assignment));
  auto det = determinant(matrix);
  auto claims = check_reduced_claims(reduced, ut, assignment);
  return {std::move(coefficients), std::move(assignment), std::move(matrix),
          std::move(reduced),      std::move(det),        std::move(claims)};
}

std::uint64_t resample_seed(std::uint64_t seed, int k) {
  return k == 0 ? seed : mix_seed(seed, static_cast<std::uint64_t>(k));
}

VerificationReport verify(const UltrametricTree& ut, std::uint64_t seed, int max_resamples) {
  const int n = ut.leaf_count();
  if (n < 4) throw std::invalid_argument("verify: the statement needs at least 4 leaves");
  if (max_resamples < 0) throw std::invalid_argument("verify: max_resamples must be nonnegative");

  VerificationReport report;
  report.n = n;
  report.d = ut.depth();
  report.total_weight = total_weight(ut.tree());
  report.seed = seed;
  report.height_sum_ok = height_sum_identity(ut).ok;
  const Valuation expected(Rational(-report.total_weight));
  for (int k = 0; k <= max_resamples; ++k) {
    report.resamples = k;
    report.trial_seed = resample_seed(seed, k);
    auto trial = run_trial(ut, report.trial_seed);
    report.valuation = trial.det.valuation();
    report.verdict = report.valuation == expected;
    report.claims = std::move(trial.claims);
    if (report.verdict && report.claims.all()) break;
  }
  return report;
}

}  // namespace phylotrop
