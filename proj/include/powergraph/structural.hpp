#pragma once

/**
 * @file structural.hpp
 * @brief Closed-form functional graphs of power maps: cyclic and abelian
 * groups, flower groups (through the pseudo-flower central tree) and the
 * quaternion, semidirect and PGL(2,q) families.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "powergraph/fgraph.hpp"
#include "powergraph/group_spec.hpp"
#include "powergraph/groups.hpp"

namespace powergraph {

FunctionalGraph cyclic_graph(u64 n, u64 t);
FunctionalGraph abelian_graph(std::span<const u64> factors, u64 t);

/// F(c0; c1..ck): petals Z_{c_i} glued along a shared copy of Z_{c0}, where
/// (i, x) with x = x'(c_i/c0) is identified with the pistil element x'.
///
/// Dense indices: pistil elements first (0..c0-1), then for each petal its
/// c_i - c0 non-pistil residues in increasing order.
class PseudoFlower {
 public:
  /// Throws std::domain_error unless the type is valid.
  explicit PseudoFlower(FlowerType type);

  [[nodiscard]] const FlowerType& type() const { return type_; }
  [[nodiscard]] std::size_t size() const { return size_; }

  /// Index of (petal, x) with petal in 1..k and x taken mod c_petal.
  [[nodiscard]] Vertex element(std::size_t petal, u64 x) const;
  /// Index of pistil element x mod c0.
  [[nodiscard]] Vertex pistil_element(u64 x) const { return static_cast<Vertex>(x % type_.pistil); }
  /// (petal, x) for an index; pistil elements report petal 0.
  [[nodiscard]] std::pair<std::size_t, u64> coordinates(Vertex v) const;
  /// The power map x -> tx on the petal coordinate.
  [[nodiscard]] Vertex pseudo_power(Vertex v, u64 t) const;
  [[nodiscard]] std::vector<Vertex> successor_table(u64 t) const;

 private:
  FlowerType type_;
  std::vector<u64> offsets_;  // first index of each petal's non-pistil block
  std::size_t size_ = 0;
};

/// The tree hanging at (0,0) in the power-map graph of the pseudo-flower.
RootedTree central_tree(const FlowerType& type, u64 t);

/// Central tree from the rewrite rules alone; nullopt when no rule applies
/// ("rules insufficient").
std::optional<RootedTree> central_tree_rules(const FlowerType& type, u64 t);

FunctionalGraph flower_graph(const FlowerType& type, u64 t);

/// Flower types of the named families.
FlowerType quaternion_type(u64 n);
FlowerType semidirect_type(u64 n, u64 m);
FlowerType pgl_type(u64 q);

/// (s^m-1)/(s-1) = 0 (mod n) and gcd(n, (s^j-1)/(s-1)) = 1 for 0 < j < m,
/// with the quotients read as geometric sums so that s = 1 (mod n) works.
bool semidirect_flower_condition(u64 n, u64 m, u64 s);

FunctionalGraph quaternion_graph(u64 n, u64 t);
/// Requires semidirect_flower_condition(n, m, s).
FunctionalGraph semidirect_graph(u64 n, u64 m, u64 s, u64 t);
/// q a supported prime power, q >= 3.
FunctionalGraph pgl_graph(u64 q, u64 t);

struct StructuralResult {
  FunctionalGraph graph;
  /// Which construction produced the graph, e.g. "abelian formula".
  std::string provenance;
  std::optional<RootedTree> central_tree;

  /// The fgraph JSON summary under "components" plus "provenance".
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Every structural construction that applies, preferred one first: the
/// abelian formula for abelian specs, then a family formula when its
/// hypotheses hold, then the generic flower formula when `flower` is given.
std::vector<StructuralResult> structural_routes(const GroupSpec& spec, u64 t,
                                                const std::optional<FlowerType>& flower = std::nullopt);

/// The preferred structural result. Builds the group and decomposes it only
/// when no family formula applies. nullopt when no theorem applies.
std::optional<StructuralResult> structural_graph(const GroupSpec& spec, u64 t);

/// Flower type of a group; nullopt for cyclic and non-flower groups.
std::optional<FlowerType> detect_flower_type(const FiniteGroup& group);

}  // namespace powergraph
