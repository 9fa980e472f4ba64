#pragma once

/**
 * @file oracle.hpp
 * @brief Ground truth by enumeration: the power-map graph of any
 * FiniteGroup, and reports comparing it with the structural result.
 */

#include <map>
#include <utility>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powergraph/fgraph.hpp"
#include "powergraph/group_spec.hpp"
#include "powergraph/groups.hpp"
#include "powergraph/structural.hpp"

namespace powergraph {

/// Worker count for successor tables and sweeps: POWERGRAPH_THREADS if set,
/// otherwise the hardware concurrency.
unsigned worker_threads();

/// g -> g^t for every element, computed by repeated squaring.
std::vector<Vertex> power_successors(const FiniteGroup& group, u64 t);
FunctionalGraph brute_force_graph(const FiniteGroup& group, u64 t);

struct OrbitInfo {
  Element element = 0;
  u64 preperiod = 0;  // steps until the orbit first reaches a periodic point
  u64 period = 1;     // length of the cycle it falls into
};
std::vector<OrbitInfo> orbit_table(const FiniteGroup& group, u64 t);

/// Canonical code -> number of periodic points carrying that tree.
using TreeCensus = std::map<std::string, u64>;
TreeCensus tree_census(const FiniteGroup& group, u64 t);

struct VerifyReport {
  std::string spec;
  u64 t = 1;
  u64 order = 0;
  std::optional<StructuralResult> structural;
  FunctionalGraph brute_force;
  /// Empty when no structural theorem applies.
  std::optional<bool> verdict;
  std::size_t distinct_trees = 0;
  std::size_t periodic_points = 0;
  std::size_t components = 0;
  double structural_ms = 0;
  double brute_force_ms = 0;
  std::string notice;

  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] std::string to_text() const;
};

VerifyReport verify(const GroupSpec& spec, u64 t);

/// One (group, t) row of an oracle sweep. Every applicable structural route
/// is checked against the brute-force graph.
struct SweepRow {
  std::string group;
  u64 t = 1;
  u64 order = 0;
  std::optional<FlowerType> flower;
  std::size_t components = 0;
  std::size_t distinct_trees = 0;
  /// (provenance, isomorphic to brute force) for each route.
  std::vector<std::pair<std::string, bool>> routes;
  std::string error;

  /// True iff at least one route applied and all of them matched.
  [[nodiscard]] bool verdict() const;
  /// False when no structural theorem covers the group.
  [[nodiscard]] bool applicable() const { return !routes.empty(); }
};

/// Rows ordered by spec then t. Groups are processed in parallel on
/// `threads` workers (0 means worker_threads()).
std::vector<SweepRow> sweep(const std::vector<GroupSpec>& specs, u64 t_first, u64 t_last, unsigned threads = 0);

}  // namespace powergraph
