#pragma once

#include "phylotrop/tree.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace phylotrop {

class NewickError : public std::runtime_error {
public:
  NewickError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses the restricted Newick dialect used throughout the project:
///
///   tree    := subtree ";"
///   subtree := leaf | "(" subtree ":" weight ("," subtree ":" weight)+ ")"
///   leaf    := positive integer label
///   weight  := decimal | integer "/" integer
///
/// Every non-root node needs a weight, internal nodes are unlabeled and the
/// root carries no weight. Whitespace between tokens is ignored. Decimal
/// weights are converted exactly. Syntax errors throw NewickError; label
/// problems (duplicates, gaps) throw TreeError.
Tree parse_newick(std::string_view text);

/// Canonical form: children ordered by smallest descendant leaf label,
/// weights as exact "p/q" or integer strings.
std::string serialize_newick(const Tree& tree);

}  // namespace phylotrop
