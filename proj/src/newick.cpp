#include "phylotrop/newick.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace phylotrop {

namespace {

class NewickParser {
public:
  explicit NewickParser(std::string_view input) : input_(input) {}

  Tree parse() {
    skip_whitespace();
    if (peek() != '(') fail("expected '(' (single-leaf trees are not supported)");
    NodeId root = parse_subtree(std::nullopt);
    skip_whitespace();
    if (peek() == ':') fail("the root cannot carry a weight");
    if (peek() != ';') fail("expected ';'");
    ++pos_;
    skip_whitespace();
    if (pos_ != input_.size()) fail("trailing characters after ';'");
    return Tree(std::move(nodes_), root);
  }

private:
  std::string_view input_;
  std::size_t pos_ = 0;
  std::vector<TreeNode> nodes_;

  [[noreturn]] void fail(const std::string& message) const { throw NewickError(message, pos_); }

  char peek() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  void skip_whitespace() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
  }

  NodeId new_node(std::optional<NodeId> parent) {
    NodeId id{static_cast<std::uint32_t>(nodes_.size())};
    nodes_.emplace_back();
    nodes_.back().parent = parent;
    if (parent) nodes_[parent->index].children.push_back(id);
    return id;
  }

  NodeId parse_subtree(std::optional<NodeId> parent) {
    skip_whitespace();
    NodeId node = new_node(parent);
    if (peek() != '(') {
      nodes_[node.index].label = parse_label();
      return node;
    }
    ++pos_;
    int count = 0;
    while (true) {
      NodeId child = parse_subtree(node);
      nodes_[child.index].weight = parse_weight_clause();
      ++count;
      skip_whitespace();
      if (peek() == ',') {
        ++pos_;
      } else if (peek() == ')') {
        ++pos_;
        break;
      } else {
        fail("expected ',' or ')'");
      }
    }
    if (count < 2) fail("internal node needs at least two children");
    skip_whitespace();
    if (at_digit()) fail("internal nodes cannot be labeled");
    return node;
  }

  Rational parse_weight_clause() {
    skip_whitespace();
    if (peek() != ':') fail("missing weight (expected ':')");
    ++pos_;
    skip_whitespace();
    if (peek() == '-') fail("negative weight");
    std::size_t start = pos_;
    while (at_digit() || peek() == '.' || peek() == '/') ++pos_;
    if (start == pos_) fail("non-numeric weight");
    try {
      return parse_rational(input_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(std::string("invalid weight: ") + e.what());
    }
  }

  int parse_label() {
    std::size_t start = pos_;
    long value = 0;
    while (at_digit()) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<int>::max()) {
        pos_ = start;
        fail("leaf label too large");
      }
      ++pos_;
    }
    if (start == pos_) fail("expected a leaf label");
    if (value == 0) {
      pos_ = start;
      fail("leaf labels start at 1");
    }
    return static_cast<int>(value);
  }
};

void emit(const Tree& tree, NodeId v, std::string& out) {
  if (tree.is_leaf(v)) {
    out += std::to_string(tree.label(v));
    return;
  }
  std::vector<NodeId> kids(tree.children(v).begin(), tree.children(v).end());
  std::sort(kids.begin(), kids.end(),
            [&](NodeId a, NodeId b) { return tree.min_leaf_below(a) < tree.min_leaf_below(b); });
  out += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ',';
    emit(tree, kids[i], out);
    out += ':';
    out += to_string(tree.weight(kids[i]));
  }
  out += ')';
}

}  // namespace

Tree parse_newick(std::string_view text) { return NewickParser(text).parse(); }

std::string serialize_newick(const Tree& tree) {
  std::string out;
  emit(tree, tree.root(), out);
  out += ';';
  return out;
}

}  // namespace phylotrop
