#include "phylotrop/tree.hpp"

#include "phylotrop/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace phylotrop {

Tree::Tree(std::vector<TreeNode> nodes, NodeId root) : nodes_(std::move(nodes)), root_(root) {
  const std::size_t count = nodes_.size();
  if (root_.index >= count) throw TreeError("root index out of range");
  if (nodes_[root_.index].parent) throw TreeError("root has a parent");
  if (nodes_[root_.index].weight != 0) throw TreeError("root carries a weight");

  // Iterative DFS from the root; every node must be reached exactly once.
  std::vector<char> seen(count, 0);
  std::vector<NodeId> preorder;
  preorder.reserve(count);
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (seen[v.index]) throw TreeError("tree contains a cycle");
    seen[v.index] = 1;
    preorder.push_back(v);
    for (NodeId c : nodes_[v.index].children) {
      if (c.index >= count) throw TreeError("child index out of range");
      if (nodes_[c.index].parent != v) throw TreeError("parent/child links disagree");
      stack.push_back(c);
    }
  }
  if (preorder.size() != count) throw TreeError("tree is not connected");

  int n = 0;
  for (const auto& node : nodes_) {
    if (node.weight < 0) throw TreeError("negative edge weight");
    if (node.children.empty()) {
      if (node.label <= 0) throw TreeError("leaf without a positive integer label");
      ++n;
    } else if (node.label != 0) {
      throw TreeError("internal node carries a label");
    }
  }
  leaf_by_label_.assign(n, NodeId{static_cast<std::uint32_t>(count)});
  for (std::uint32_t i = 0; i < count; ++i) {
    int label = nodes_[i].label;
    if (label == 0) continue;
    if (label > n)
      throw TreeError("leaf labels must be exactly 1.." + std::to_string(n) + ", found " +
                      std::to_string(label));
    if (leaf_by_label_[label - 1].index != count)
      throw TreeError("duplicate leaf label " + std::to_string(label));
    leaf_by_label_[label - 1] = NodeId{i};
  }

  postorder_.assign(preorder.rbegin(), preorder.rend());
  min_leaf_.assign(count, 0);
  leaves_below_.assign(count, 0);
  for (NodeId v : postorder_) {
    const auto& node = nodes_[v.index];
    if (node.children.empty()) {
      min_leaf_[v.index] = node.label;
      leaves_below_[v.index] = 1;
      continue;
    }
    int lo = n + 1;
    int total = 0;
    for (NodeId c : node.children) {
      lo = std::min(lo, min_leaf_[c.index]);
      total += leaves_below_[c.index];
    }
    min_leaf_[v.index] = lo;
    leaves_below_[v.index] = total;
  }
}

NodeId Tree::leaf(int label) const {
  if (label < 1 || label > leaf_count()) throw TreeError("unknown leaf label " + std::to_string(label));
  return leaf_by_label_[label - 1];
}

std::vector<NodeId> Tree::internal_nodes() const {
  std::vector<NodeId> out;
  for (std::uint32_t i = 0; i < nodes_.size(); ++i)
    if (!nodes_[i].children.empty()) out.push_back(NodeId{i});
  return out;
}

std::vector<int> Tree::leaves_below(NodeId v) const {
  std::vector<int> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    if (is_leaf(u)) out.push_back(label(u));
    for (NodeId c : children(u)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tree Tree::relabeled(std::span<const int> permutation) const {
  if (static_cast<int>(permutation.size()) != leaf_count())
    throw TreeError("relabeling permutation has the wrong length");
  auto copy = nodes_;
  for (auto& node : copy)
    if (node.label != 0) node.label = permutation[node.label - 1];
  return Tree(std::move(copy), root_);
}

NodeId TreeBuilder::add_root() {
  if (!nodes_.empty()) throw TreeError("TreeBuilder: root already added");
  nodes_.emplace_back();
  return NodeId{0};
}

NodeId TreeBuilder::add_child(NodeId parent, Rational weight, int label) {
  if (parent.index >= nodes_.size()) throw TreeError("TreeBuilder: unknown parent");
  NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  TreeNode node;
  node.parent = parent;
  node.weight = std::move(weight);
  node.label = label;
  nodes_.push_back(std::move(node));
  nodes_[parent.index].children.push_back(id);
  return id;
}

Tree TreeBuilder::build() && {
  if (nodes_.empty()) throw TreeError("TreeBuilder: empty tree");
  return Tree(std::move(nodes_), NodeId{0});
}

Rational total_weight(const Tree& tree) {
  Rational sum = 0;
  for (NodeId v : tree.postorder()) sum += tree.weight(v);
  return sum;
}

void validate_phylogenetic(const Tree& tree) {
  for (NodeId v : tree.postorder()) {
    if (v == tree.root()) continue;
    if (tree.weight(v) <= 0)
      throw TreeError("phylogenetic trees need strictly positive edge weights");
  }
}

bool tree_order_leq(const Tree& tree, NodeId u, NodeId w) {
  std::optional<NodeId> cur = w;
  while (cur) {
    if (*cur == u) return true;
    cur = tree.parent(*cur);
  }
  return false;
}

UltrametricTree validate_ultrametric(Tree tree) {
  using Kind = UltrametricError::Kind;
  for (NodeId v : tree.postorder()) {
    if (tree.is_leaf(v)) continue;
    if (tree.children(v).size() != 2)
      throw UltrametricError(Kind::NotBinary, "node with " + std::to_string(tree.children(v).size()) +
                                                  " children; ultrametric trees are binary");
  }
  if (tree.is_leaf(tree.root()))
    throw UltrametricError(Kind::NotBinary, "single-leaf tree has no binary root");

  // Root-to-node path weights; every leaf must sit at the same depth.
  const std::size_t count = tree.node_count();
  std::vector<Rational> depth(count);
  auto post = tree.postorder();
  for (auto it = post.rbegin(); it != post.rend(); ++it) {
    if (auto p = tree.parent(*it)) depth[it->index] = depth[p->index] + tree.weight(*it);
  }
  std::optional<NodeId> first_leaf;
  for (NodeId v : post) {
    if (!tree.is_leaf(v)) continue;
    if (!first_leaf) {
      first_leaf = v;
    } else if (depth[v.index] != depth[first_leaf->index]) {
      throw UltrametricError(Kind::NotEquidistant,
                             "leaf " + std::to_string(tree.label(*first_leaf)) + " at depth " +
                                 to_string(depth[first_leaf->index]) + " but leaf " +
                                 std::to_string(tree.label(v)) + " at depth " + to_string(depth[v.index]));
    }
  }
  Rational d = depth[first_leaf->index];
  std::vector<Rational> heights(count);
  for (NodeId v : post) {
    heights[v.index] = d - depth[v.index];
    // Two leaves are at distance 2·h(lca); zero height above a leaf means distance zero.
    if (!tree.is_leaf(v) && heights[v.index] == 0)
      throw UltrametricError(Kind::ZeroLeafDistance,
                             "leaves " + std::to_string(tree.min_leaf_below(tree.children(v)[0])) + " and " +
                                 std::to_string(tree.min_leaf_below(tree.children(v)[1])) +
                                 " are at path weight 0");
  }
  return UltrametricTree(std::move(tree), std::move(d), std::move(heights));
}

std::vector<NodeId> internal_node_order(const UltrametricTree& ut) {
  const Tree& tree = ut.tree();
  // Nodes joined by zero-weight edges share a height; they are keyed by the
  // smallest label below the topmost node of that run, then by subtree size
  // so descendants precede ancestors.
  struct Key {
    NodeId node;
    int run_min_leaf;
    int size;
  };
  std::vector<Key> keys;
  for (NodeId v : tree.internal_nodes()) {
    NodeId top = v;
    while (auto p = tree.parent(top)) {
      if (ut.height(*p) != ut.height(top)) break;
      top = *p;
    }
    keys.push_back({v, tree.min_leaf_below(top), tree.leaf_count_below(v)});
  }
  std::sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
    int c = cmp(ut.height(a.node), ut.height(b.node));
    if (c != 0) return c < 0;
    return std::tie(a.run_min_leaf, a.size) < std::tie(b.run_min_leaf, b.size);
  });
  std::vector<NodeId> order;
  order.reserve(keys.size());
  for (const auto& k : keys) order.push_back(k.node);
  return order;
}

namespace {

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

}  // namespace

UltrametricTree random_ultrametric(int n, const Rational& depth, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_ultrametric: need at least 2 leaves");
  if (depth <= 0) throw std::invalid_argument("random_ultrametric: depth must be positive");
  Rng rng(seed);
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  shuffle(labels, rng);

  // Heights live on the grid depth·k/levels with levels = N·⌈depth⌉, so an
  // integer depth gives heights (and weights) with denominator N ≤ 8.
  Integer ceil_depth;
  mpz_cdiv_q(ceil_depth.get_mpz_t(), depth.get_num_mpz_t(), depth.get_den_mpz_t());
  const std::int64_t levels = rng.between(1, 8) * std::max<std::int64_t>(1, ceil_depth.get_si());
  auto height_at = [&](std::int64_t k) { return Rational(depth * make_rational(static_cast<long>(k), static_cast<long>(levels))); };

  struct Pending {
    NodeId node;
    int lo, hi;        // labels[lo, hi) sit below node
    std::int64_t level;
  };
  TreeBuilder builder;
  std::vector<Pending> stack{{builder.add_root(), 0, n, levels}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    int split = static_cast<int>(rng.between(cur.lo + 1, cur.hi - 1));
    for (auto [lo, hi] : {std::pair{cur.lo, split}, std::pair{split, cur.hi}}) {
      if (hi - lo == 1) {
        builder.add_child(cur.node, height_at(cur.level), labels[lo]);
        continue;
      }
      // Strictly lower when possible; equal heights (zero-weight edges)
      // one time in four.
      std::int64_t level = cur.level;
      if (cur.level > 1 && rng.below(4) != 0) level = rng.between(1, cur.level - 1);
      NodeId child = builder.add_child(cur.node, height_at(cur.level - level));
      stack.push_back({child, lo, hi, level});
    }
  }
  return validate_ultrametric(std::move(builder).build());
}

Tree random_phylogenetic(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_phylogenetic: need at least 2 leaves");
  Rng rng(seed);
  // Mutable parent-array form; node 0 is the root.
  std::vector<int> parent{-1};
  std::vector<int> label{0};
  auto add = [&](int p, int l) {
    parent.push_back(p);
    label.push_back(l);
    return static_cast<int>(parent.size()) - 1;
  };
  add(0, 1);
  add(0, 2);
  for (int next = 3; next <= n; ++next) {
    std::vector<int> internals;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
      if (label[v] == 0) internals.push_back(v);
    if (rng.below(4) == 0) {
      // Multifurcation: attach directly to an existing internal node.
      add(internals[rng.below(internals.size())], next);
    } else {
      // Subdivide the edge above a random non-root node.
      int c = static_cast<int>(1 + rng.below(parent.size() - 1));
      int u = add(parent[c], 0);
      parent[c] = u;
      add(u, next);
    }
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  shuffle(perm, rng);

  std::vector<std::vector<int>> kids(parent.size());
  for (int v = 1; v < static_cast<int>(parent.size()); ++v) kids[parent[v]].push_back(v);
  TreeBuilder builder;
  std::vector<std::pair<int, NodeId>> stack{{0, builder.add_root()}};
  while (!stack.empty()) {
    auto [v, id] = stack.back();
    stack.pop_back();
    for (int c : kids[v]) {
      long q = static_cast<long>(rng.between(1, 8));
      long k = static_cast<long>(rng.between(1, 4 * q));
      int l = label[c] == 0 ? 0 : perm[label[c] - 1];
      stack.push_back({c, builder.add_child(id, make_rational(k, q), l)});
    }
  }
  return std::move(builder).build();
}

}  // namespace phylotrop
