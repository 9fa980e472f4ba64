#pragma once

/**
 * @file fgraph.hpp
 * @brief Functional graphs as multisets of components (a cycle with a rooted
 * tree hanging at every cycle vertex) and their algebra.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "powergraph/tree.hpp"

namespace powergraph {

using Vertex = std::uint32_t;

/// One connected component: trees listed in cycle order, so trees()[i]
/// hangs at the i-th cycle vertex and that vertex maps to the (i+1)-th.
class Component {
 public:
  explicit Component(std::vector<RootedTree> cycle_trees);

  [[nodiscard]] std::size_t cycle_length() const { return trees_.size(); }
  [[nodiscard]] std::span<const RootedTree> trees() const { return trees_; }
  [[nodiscard]] std::size_t vertex_count() const;
  /// True when every cycle vertex carries an isomorphic tree.
  [[nodiscard]] bool is_regular() const;
  /// Code of the lexicographically least rotation of the tree codes.
  [[nodiscard]] std::string canonical_code() const;

 private:
  std::vector<RootedTree> trees_;
};

class FunctionalGraph {
 public:
  FunctionalGraph() = default;
  explicit FunctionalGraph(std::vector<Component> components) : components_(std::move(components)) {}

  [[nodiscard]] std::span<const Component> components() const { return components_; }
  [[nodiscard]] bool empty() const { return components_.empty(); }
  [[nodiscard]] std::size_t vertex_count() const;
  [[nodiscard]] std::size_t periodic_count() const;

  void add(Component c) { components_.push_back(std::move(c)); }
  void append(const FunctionalGraph& other);

 private:
  std::vector<Component> components_;
};

/// Cyc(m, T): an m-cycle with T hanging at every cycle vertex.
FunctionalGraph cyc(u64 m, const RootedTree& tree = leaf());
/// {T} = Cyc(1, T).
FunctionalGraph loop(const RootedTree& tree);
FunctionalGraph disjoint_union(std::span<const FunctionalGraph> graphs);
/// k x g.
FunctionalGraph replicate(u64 k, const FunctionalGraph& graph);
/// Categorical product: vertex pairs with (u, v) -> (f(u), g(v)).
FunctionalGraph tensor(const FunctionalGraph& a, const FunctionalGraph& b);

/// Vertex-level breakdown of a self-map produced alongside its graph.
struct MapDecomposition {
  FunctionalGraph graph;
  /// For every vertex: component index, position on that component's cycle
  /// of the periodic vertex it drains into, and its preperiod.
  std::vector<std::uint32_t> component;
  std::vector<std::uint32_t> cycle_position;
  std::vector<std::uint32_t> preperiod;

  [[nodiscard]] bool is_periodic(Vertex v) const { return preperiod[v] == 0; }
  /// Tree hanging at the periodic vertex v drains into.
  [[nodiscard]] const RootedTree& hanging_tree(Vertex v) const;
  [[nodiscard]] std::size_t period(Vertex v) const;
};

/// Exact decomposition of the map i -> successor[i] on {0, ..., n-1}.
MapDecomposition decompose_map(std::span<const Vertex> successor);
FunctionalGraph from_map(std::span<const Vertex> successor);
/// An explicit self-map realizing the graph (inverse of from_map up to
/// isomorphism).
std::vector<Vertex> to_map(const FunctionalGraph& graph);

/// Sorted multiset of component codes; equal iff the graphs are isomorphic.
std::string canonical_form(const FunctionalGraph& graph);
bool is_isomorphic(const FunctionalGraph& a, const FunctionalGraph& b);

/// Number of pairwise non-isomorphic trees hanging at periodic points.
std::size_t distinct_tree_count(const FunctionalGraph& graph);

}  // namespace powergraph
