#pragma once

/**
 * @file fgraph_io.hpp
 * @brief Text, JSON and Graphviz renderings of functional graphs.
 *
 * Text uses an ASCII form of the usual notation: `(+)` for disjoint union,
 * `kx` for k-fold copies, `T(a,b,...)` for elementary trees, `{T}` for a
 * single loop carrying T, `k.` for scalar dot and `+_j` for j-sums.
 */

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "powergraph/fgraph.hpp"

namespace powergraph {

/// Isomorphism classes of components with their multiplicities, in the
/// stable rendering order (larger trees first).
struct ComponentClass {
  Component representative;
  u64 multiplicity = 0;
};
std::vector<ComponentClass> component_classes(const FunctionalGraph& graph);

std::string to_text(const FunctionalGraph& graph);

/// List of {multiplicity, cycle_length, tree_code, tree_node_count,
/// tree_depth, tree}. Irregular components carry `cycle_tree_codes` instead
/// of a single tree_code.
nlohmann::json to_json_summary(const FunctionalGraph& graph);
FunctionalGraph from_json_summary(const nlohmann::json& summary);

/// One digraph; components in canonical order, each as its own cluster.
std::string to_dot(const FunctionalGraph& graph, std::string_view name = "G");

}  // namespace powergraph
