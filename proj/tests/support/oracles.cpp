#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace phylotrop::oracle {

Rational union_of_paths_weight(const Tree& tree, std::span<const int> sigma) {
  std::set<std::uint32_t> edges;  // identified by lower endpoint
  for (std::size_t a = 0; a < sigma.size(); ++a)
    for (std::size_t b = a + 1; b < sigma.size(); ++b) {
      std::vector<NodeId> up_a, up_b;
      for (std::optional<NodeId> v = tree.leaf(sigma[a]); v; v = tree.parent(*v)) up_a.push_back(*v);
      for (std::optional<NodeId> v = tree.leaf(sigma[b]); v; v = tree.parent(*v)) up_b.push_back(*v);
      // Strip the shared root-side suffix; what remains are the path edges.
      while (up_a.size() > 0 && up_b.size() > 0 && up_a.back() == up_b.back()) {
        up_a.pop_back();
        up_b.pop_back();
      }
      for (NodeId v : up_a) edges.insert(v.index);
      for (NodeId v : up_b) edges.insert(v.index);
    }
  Rational sum = 0;
  for (auto e : edges) sum += tree.weight(NodeId{e});
  return sum;
}

namespace {

Rational descend(const Tree& tree, NodeId v) {
  if (tree.is_leaf(v)) return 0;
  NodeId c = tree.children(v)[0];
  return tree.weight(c) + descend(tree, c);
}

}  // namespace

std::vector<Rational> heights_by_descent(const Tree& tree) {
  std::vector<Rational> out(tree.node_count());
  for (std::uint32_t i = 0; i < tree.node_count(); ++i) out[i] = descend(tree, NodeId{i});
  return out;
}

PuiseuxPoly permutation_determinant(const PuiseuxMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PuiseuxPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    PuiseuxPoly product = PuiseuxPoly::constant(1);
    for (std::size_t i = 0; i < n; ++i) product = product * m.at(i, perm[i]);
    if (inversions % 2)
      total -= product;
    else
      total += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ExtRational brute_force_assignment(const ValuationMatrix& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExtRational best = ExtRational::infinity();
  do {
    ExtRational sum(Rational(0));
    for (std::size_t i = 0; i < n; ++i) sum = sum + v[i][perm[i]];
    best = std::min(best, sum);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

PuiseuxMatrix random_matrix(Rng& rng, std::size_t n, int max_terms) {
  PuiseuxMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<PuiseuxTerm> terms;
      const auto count = rng.below(static_cast<std::uint64_t>(max_terms) + 1);
      for (std::uint64_t t = 0; t < count; ++t) {
        long q = static_cast<long>(rng.between(1, 3));
        long k = static_cast<long>(rng.between(-6 * q, 6 * q));
        terms.push_back({make_rational(k, q), Integer(static_cast<long>(rng.between(-5, 5)))});
      }
      m.at(r, c) = PuiseuxPoly::from_terms(std::move(terms));
    }
  return m;
}

ColumnReductionSeq random_reduction(Rng& rng, int n) {
  ColumnReductionSeq seq{n, {}};
  std::vector<int> columns(n);
  std::iota(columns.begin(), columns.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(columns[i], columns[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  const int length = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  for (int k = 0; k < length; ++k) {
    // a_1..a_{k+1} are columns[0..k]; b must avoid them.
    int b = columns[k + 1 + rng.below(static_cast<std::uint64_t>(n - k - 1))];
    seq.steps.emplace_back(columns[k], b);
  }
  return seq;
}

DistanceMatrix random_ultrametric_matrix(Rng& rng, int n) {
  // Random agglomeration: merging two clusters at a height above both sets
  // the distance between their members to twice that height.
  std::vector<std::vector<int>> clusters;
  std::vector<Rational> tops;
  for (int i = 1; i <= n; ++i) {
    clusters.push_back({i});
    tops.push_back(Rational(0));
  }
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  while (clusters.size() > 1) {
    std::size_t a = rng.below(clusters.size());
    std::size_t b = rng.below(clusters.size() - 1);
    if (b >= a) ++b;
    Rational base = std::max(tops[a], tops[b]);
    // Ties with the taller child are allowed (non-binary merges).
    Rational h = base + make_rational(static_cast<long>(rng.between(base == 0 ? 1 : 0, 6)), 4);
    for (int x : clusters[a])
      for (int y : clusters[b]) d[x - 1][y - 1] = d[y - 1][x - 1] = 2 * h;
    clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
    tops[a] = h;
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
    tops.erase(tops.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return DistanceMatrix(std::move(d));
}

}  // namespace phylotrop::oracle
