#pragma once

/**
 * @file tree.hpp
 * @brief Unordered rooted trees and the tree algebra used to describe the
 * non-periodic part of power-map functional graphs.
 *
 * A RootedTree is an immutable value. Children are kept sorted by their
 * canonical code, so two trees are isomorphic exactly when their codes
 * agree. Subtrees are shared between trees, which keeps k-fold copies
 * (k.T, k x T) cheap.
 *
 * Trees built through the algebra (elementary_tree, tree_sum, scalar_dot,
 * j_sum, enclose) carry a human-readable label in ASCII notation such as
 * "T(4,2) +_2 <24x*>". Labels never take part in comparisons.
 */

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powergraph/arith.hpp"

namespace powergraph {

class RootedTree {
 public:
  /// The single-vertex tree.
  RootedTree();

  [[nodiscard]] std::span<const RootedTree> children() const;
  [[nodiscard]] bool is_leaf() const { return children().empty(); }
  [[nodiscard]] std::size_t node_count() const;
  /// Height: length of the longest root-to-leaf path.
  [[nodiscard]] std::size_t depth() const;
  /// Balanced-parenthesis code; equal iff the trees are isomorphic.
  [[nodiscard]] const std::string& code() const;
  /// Notation label, empty when the tree was not built through the algebra.
  [[nodiscard]] const std::string& label() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b);
  friend bool operator<(const RootedTree& a, const RootedTree& b) { return a.code() < b.code(); }

  /// Low-level constructor: root whose children are `children`.
  static RootedTree from_children(std::vector<RootedTree> children, std::string label = {});

 private:
  struct Node;
  explicit RootedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Forest = std::vector<RootedTree>;

/// One depth class of a homogeneous tree's root children.
struct Layer {
  RootedTree tree;
  u64 multiplicity = 0;
};

RootedTree leaf();
/// <F>: new root whose children are the trees of F.
RootedTree enclose(Forest forest);
/// Root identification: children of the result are the union of all children.
RootedTree tree_sum(std::span<const RootedTree> trees);
RootedTree tree_sum(const RootedTree& a, const RootedTree& b);
/// k.T = <k x G> for T = <G>.
RootedTree scalar_dot(u64 k, const RootedTree& tree);
RootedTree elementary_tree(const Sequence& seq);

/// Child subtrees of the root grouped by depth, if every depth class consists
/// of pairwise isomorphic trees.
std::optional<std::map<std::size_t, Layer>> homogeneous_layers(const RootedTree& tree);
bool is_homogeneous(const RootedTree& tree);
/// T +_j S: replace one depth-j child subtree T_j of T by T_j + S.
RootedTree j_sum(const RootedTree& tree, std::size_t j, const RootedTree& addend);

std::string canonical_code(const RootedTree& tree);
/// Inverse of canonical_code (nested-list text form).
RootedTree parse_tree_code(std::string_view code);

/// The sequence v with T_v isomorphic to `tree`, if the tree is elementary.
std::optional<Sequence> elementary_sequence(const RootedTree& tree);

/// ASCII notation: the label when present, else a reconstruction from
/// elementary pieces, e.g. "T(5) + 65.T(2,2)".
std::string describe_tree(const RootedTree& tree);

/// Graphviz rendering of a single rooted tree, edges pointing to the root.
std::string tree_to_dot(const RootedTree& tree, std::string_view name = "tree");

}  // namespace powergraph
