#pragma once

#include "phylotrop/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace phylotrop {

struct NodeId {
  std::uint32_t index = 0;
  friend auto operator<=>(NodeId, NodeId) = default;
};

struct TreeNode {
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  Rational weight;  // edge to the parent; zero at the root
  int label = 0;    // 1..n on leaves, 0 on internal nodes
};

class TreeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Rooted, edge-weighted tree whose leaves carry the labels 1..n.
/// Immutable once constructed; the constructor checks connectivity,
/// acyclicity, label bijectivity and nonnegative weights.
class Tree {
public:
  Tree(std::vector<TreeNode> nodes, NodeId root);

  NodeId root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }
  int leaf_count() const { return static_cast<int>(leaf_by_label_.size()); }

  const TreeNode& node(NodeId v) const { return nodes_.at(v.index); }
  bool is_leaf(NodeId v) const { return node(v).children.empty(); }
  std::span<const NodeId> children(NodeId v) const { return node(v).children; }
  std::optional<NodeId> parent(NodeId v) const { return node(v).parent; }
  const Rational& weight(NodeId v) const { return node(v).weight; }
  int label(NodeId v) const { return node(v).label; }

  /// Leaf carrying `label`; throws TreeError for unknown labels.
  NodeId leaf(int label) const;

  /// Every node, children before parents, root last.
  std::span<const NodeId> postorder() const { return postorder_; }
  std::vector<NodeId> internal_nodes() const;

  int min_leaf_below(NodeId v) const { return min_leaf_.at(v.index); }
  int leaf_count_below(NodeId v) const { return leaves_below_.at(v.index); }
  std::vector<int> leaves_below(NodeId v) const;

  /// Same shape with every leaf label l replaced by permutation[l - 1].
  Tree relabeled(std::span<const int> permutation) const;

private:
  std::vector<TreeNode> nodes_;
  NodeId root_;
  std::vector<NodeId> leaf_by_label_;
  std::vector<NodeId> postorder_;
  std::vector<int> min_leaf_;
  std::vector<int> leaves_below_;
};

/// Incremental construction helper for parsers and generators.
class TreeBuilder {
public:
  NodeId add_root();
  NodeId add_child(NodeId parent, Rational weight, int label = 0);
  Tree build() &&;

private:
  std::vector<TreeNode> nodes_;
};

Rational total_weight(const Tree& tree);

/// Throws TreeError unless every edge weight is strictly positive.
void validate_phylogenetic(const Tree& tree);

/// True iff u lies on the path from the root to w (reflexive).
bool tree_order_leq(const Tree& tree, NodeId u, NodeId w);

class UltrametricError : public std::runtime_error {
public:
  enum class Kind { NotBinary, NotEquidistant, ZeroLeafDistance };
  UltrametricError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// A tree that passed validate_ultrametric, together with its depth d and
/// the height of every node above the leaves.
class UltrametricTree {
public:
  const Tree& tree() const { return tree_; }
  const Rational& depth() const { return depth_; }
  const Rational& height(NodeId v) const { return heights_.at(v.index); }
  std::span<const Rational> heights() const { return heights_; }
  int leaf_count() const { return tree_.leaf_count(); }

private:
  friend UltrametricTree validate_ultrametric(Tree tree);
  UltrametricTree(Tree tree, Rational depth, std::vector<Rational> heights)
      : tree_(std::move(tree)), depth_(std::move(depth)), heights_(std::move(heights)) {}

  Tree tree_;
  Rational depth_;
  std::vector<Rational> heights_;
};

/// Checks binarity, equidistance and positive leaf-to-leaf distances.
/// Throws UltrametricError naming the first failed condition.
UltrametricTree validate_ultrametric(Tree tree);

/// Internal nodes sorted so that every node precedes its ancestors: by
/// height, then by the smallest leaf label below. Runs of nodes joined by
/// zero-weight edges share the label of the run's top node and are ordered
/// bottom-up. The root comes last.
std::vector<NodeId> internal_node_order(const UltrametricTree& tree);

/// Random binary d-equidistant tree. Node heights lie on a grid of step
/// d/(N·⌈d⌉) with N ≤ 8, so an integer d yields weights with denominators
/// at most 8. Zero-weight internal edges occur. Deterministic in seed;
/// throws for n < 2 or d ≤ 0.
UltrametricTree random_ultrametric(int n, const Rational& depth, std::uint64_t seed);

/// Random phylogenetic tree on n ≥ 2 leaves with positive rational weights;
/// internal nodes may have more than two children.
Tree random_phylogenetic(int n, std::uint64_t seed);

}  // namespace phylotrop
