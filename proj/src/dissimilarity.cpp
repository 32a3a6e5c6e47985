#include "phylotrop/dissimilarity.hpp"

#include <algorithm>
#include <string>

namespace phylotrop {

Rational steiner_weight(const Tree& tree, std::span<const int> sigma) {
  if (sigma.size() < 2) throw std::invalid_argument("steiner_weight: need at least two leaves");
  const int n = tree.leaf_count();
  std::vector<char> in_sigma(n + 1, 0);
  for (int l : sigma) {
    if (l < 1 || l > n) throw std::invalid_argument("steiner_weight: unknown leaf label " + std::to_string(l));
    if (in_sigma[l]) throw std::invalid_argument("steiner_weight: repeated leaf label " + std::to_string(l));
    in_sigma[l] = 1;
  }
  const int k = static_cast<int>(sigma.size());
  std::vector<int> below(tree.node_count(), 0);
  Rational sum = 0;
  for (NodeId v : tree.postorder()) {
    int c = tree.is_leaf(v) ? in_sigma[tree.label(v)] : 0;
    for (NodeId child : tree.children(v)) c += below[child.index];
    below[v.index] = c;
    if (v != tree.root() && c > 0 && c < k) sum += tree.weight(v);
  }
  return sum;
}

const Rational& DissimilarityVector::at(std::span<const int> sigma) const {
  return values.at(subset_rank(n, sigma));
}

DissimilarityVector dissimilarity_vector(const Tree& tree, int m) {
  const int n = tree.leaf_count();
  if (m < 2 || m > n)
    throw std::invalid_argument("dissimilarity_vector: m must lie in [2, " + std::to_string(n) + "]");
  DissimilarityVector out{n, m, k_subsets(n, m), {}};
  out.values.reserve(out.subsets.size());
  for (const auto& sigma : out.subsets) out.values.push_back(steiner_weight(tree, sigma));
  return out;
}

DistanceMatrix::DistanceMatrix(std::vector<std::vector<Rational>> rows) : n_(static_cast<int>(rows.size())) {
  entries_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("distance matrix is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (int i = 1; i <= n_; ++i) {
    if ((*this)(i, i) != 0) throw std::invalid_argument("distance matrix has a nonzero diagonal entry");
    for (int j = 1; j <= n_; ++j) {
      if ((*this)(i, j) < 0) throw std::invalid_argument("distance matrix has a negative entry");
      if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("distance matrix is not symmetric");
    }
  }
}

DistanceMatrix leaf_distances(const Tree& tree) {
  const int n = tree.leaf_count();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::array<int, 2> pair{i, j};
      rows[i - 1][j - 1] = rows[j - 1][i - 1] = steiner_weight(tree, pair);
    }
  return DistanceMatrix(std::move(rows));
}

std::optional<UltrametricWitness> find_ultrametric_violation(const DistanceMatrix& dm) {
  const int n = dm.size();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (dm(x, z) > std::max(dm(x, y), dm(y, z))) return UltrametricWitness{x, y, z};
      }
  return std::nullopt;
}

UltrametricTree realize_ultrametric(const DistanceMatrix& dm) {
  const int n = dm.size();
  if (n < 2) throw NotUltrametricError("realize_ultrametric: need at least two points", std::nullopt);
  if (auto w = find_ultrametric_violation(dm))
    throw NotUltrametricError("distance matrix is not ultrametric: d(" + std::to_string(w->x) + "," +
                                  std::to_string(w->z) + ") exceeds max(d(" + std::to_string(w->x) + "," +
                                  std::to_string(w->y) + "), d(" + std::to_string(w->y) + "," +
                                  std::to_string(w->z) + "))",
                              w);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (dm(i, j) == 0)
        throw NotUltrametricError("points " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are at distance 0",
                                  std::nullopt);

  // Mutable forest: each cluster is a node with a height; merging two
  // clusters creates a parent at height d/2. Cluster distance is the
  // distance between representatives, which the ultrametric inequality
  // makes independent of the choice.
  struct Cluster {
    int node;
    int representative;  // smallest label, also the tie-break key
  };
  std::vector<int> parent(n, -1);
  std::vector<Rational> heights(n, Rational(0));
  std::vector<int> labels(n);
  std::vector<Cluster> clusters;
  for (int i = 0; i < n; ++i) {
    labels[i] = i + 1;
    clusters.push_back({i, i + 1});
  }
  while (clusters.size() > 1) {
    std::size_t best_a = 0, best_b = 1;
    for (std::size_t a = 0; a < clusters.size(); ++a)
      for (std::size_t b = a + 1; b < clusters.size(); ++b) {
        const auto& cur = dm(clusters[a].representative, clusters[b].representative);
        const auto& best = dm(clusters[best_a].representative, clusters[best_b].representative);
        auto key = [&](std::size_t p, std::size_t q) {
          return std::pair{std::min(clusters[p].representative, clusters[q].representative),
                           std::max(clusters[p].representative, clusters[q].representative)};
        };
        if (cur < best || (cur == best && key(a, b) < key(best_a, best_b))) {
          best_a = a;
          best_b = b;
        }
      }
    Rational h = dm(clusters[best_a].representative, clusters[best_b].representative) / 2;
    int node = static_cast<int>(parent.size());
    parent.push_back(-1);
    heights.push_back(h);
    labels.push_back(0);
    parent[clusters[best_a].node] = node;
    parent[clusters[best_b].node] = node;
    Cluster merged{node, std::min(clusters[best_a].representative, clusters[best_b].representative)};
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_b));
    clusters[best_a] = merged;
  }

  const int root = clusters.front().node;
  std::vector<std::vector<int>> kids(parent.size());
  for (int v = 0; v < static_cast<int>(parent.size()); ++v)
    if (parent[v] >= 0) kids[parent[v]].push_back(v);
  TreeBuilder builder;
  std::vector<std::pair<int, NodeId>> stack{{root, builder.add_root()}};
  while (!stack.empty()) {
    auto [v, id] = stack.back();
    stack.pop_back();
    for (int c : kids[v])
      stack.push_back({c, builder.add_child(id, Rational(heights[v] - heights[c]), labels[c])});
  }
  return validate_ultrametric(std::move(builder).build());
}

}  // namespace phylotrop
