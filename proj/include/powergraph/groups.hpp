#pragma once

/**
 * @file groups.hpp
 * @brief Concrete finite groups with dense element indexing, maximal cyclic
 * subgroups and flower-group detection.
 *
 * Elements are indices 0..order()-1. Every concrete group picks its own
 * normal form (residues, mixed radix tuples, b^i a^j words, normalized
 * 2x2 matrices) and maps it to a dense index so that power-map successor
 * tables are plain arrays.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "powergraph/arith.hpp"

namespace powergraph {

using Element = std::uint32_t;
/// Sorted list of element indices.
using ElementSet = std::vector<Element>;

/// Groups larger than this are rejected.
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 24;

class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  [[nodiscard]] virtual std::size_t order() const = 0;
  [[nodiscard]] virtual Element multiply(Element a, Element b) const = 0;
  [[nodiscard]] virtual Element identity() const { return 0; }
  [[nodiscard]] virtual std::string label(Element g) const = 0;
  [[nodiscard]] virtual std::string name() const = 0;
  /// Orders of cyclic factors when the group is abelian by construction.
  [[nodiscard]] virtual std::optional<std::vector<u64>> cyclic_factors() const { return std::nullopt; }
};

std::unique_ptr<FiniteGroup> make_cyclic(u64 n);
std::unique_ptr<FiniteGroup> make_abelian(std::vector<u64> factors);
/// Z_n^* with elements ordered by residue.
std::unique_ptr<FiniteGroup> make_units_mod(u64 n);
/// Dihedral group of order 2n, n >= 2.
std::unique_ptr<FiniteGroup> make_dihedral(u64 n);
/// Generalized quaternion group Q_{4n} = <a, b | a^{2n}, a^n = b^2, bab^-1 = a^-1>, n >= 2.
std::unique_ptr<FiniteGroup> make_quaternion(u64 n);
/// C_n x|_s C_m = <a, b | b^n = a^m = 1, aba^-1 = b^s>; requires s^m = 1 (mod n).
std::unique_ptr<FiniteGroup> make_semidirect(u64 n, u64 m, u64 s);
/// PGL(2, q) for q prime or q in {4, 8, 9, 16, 25, 27}.
std::unique_ptr<FiniteGroup> make_pgl2(u64 q);

/// Cyclic factor orders of Z_n^* (from the Chinese remainder theorem).
std::vector<u64> units_mod_factors(u64 n);

/// g^t by square-and-multiply; t >= 1.
Element power(const FiniteGroup& group, Element g, u64 t);
std::vector<u64> element_orders(const FiniteGroup& group);
bool is_cyclic(const FiniteGroup& group);
bool is_abelian(const FiniteGroup& group);
/// Elements of <g>, sorted.
ElementSet cyclic_subgroup(const FiniteGroup& group, Element g);
ElementSet center(const FiniteGroup& group);

/// All maximal cyclic subgroups, sorted by order then contents.
std::vector<ElementSet> mu_subgroups(const FiniteGroup& group);

/// Pistil and petal orders (c_0; c_1, ..., c_k), petals ascending.
struct FlowerType {
  u64 pistil = 1;
  std::vector<u64> petals;

  /// Throws std::domain_error unless k >= 1 and c_0 | c_i for every petal.
  void validate() const;
  /// Sum c_i - (k - 1) c_0.
  [[nodiscard]] u64 element_count() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const FlowerType&, const FlowerType&) = default;
};

struct FlowerDecomposition {
  ElementSet pistil;
  std::vector<ElementSet> petals;  // sorted by order

  [[nodiscard]] FlowerType type() const;
};

/// The flower structure of a noncyclic group, or nullopt when the maximal
/// cyclic subgroups do not share a common pairwise intersection.
/// Throws std::domain_error for cyclic groups.
std::optional<FlowerDecomposition> flower_decompose(const FiniteGroup& group);

/// Generators g_i of the petals with g_i^{c_i/c_0} all equal, found by a
/// direct scan over exponents f_i = f (mod c_0) coprime to |G|.
std::vector<Element> compatible_generators(const FiniteGroup& group, const FlowerDecomposition& flower);

/// Spot-checks associativity on `samples` random triples plus identity and
/// inverse laws on sampled elements. Returns false on the first violation.
bool spot_check_group_axioms(const FiniteGroup& group, std::size_t samples, std::uint64_t seed = 1);

}  // namespace powergraph
