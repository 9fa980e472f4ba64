#pragma once

/**
 * @file group_spec.hpp
 * @brief The textual group notation used on the command line:
 * `cyclic:12`, `abelian:6x12`, `units:91`, `dihedral:12`, `quaternion:24`,
 * `semidirect:n=65,m=4,s=8`, `pgl2:5`.
 *
 * Dihedral and quaternion specs give the group order (2n and 4n).
 */

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powergraph/groups.hpp"

namespace powergraph {

enum class GroupFamily { Cyclic, Abelian, Units, Dihedral, Quaternion, Semidirect, PGL2 };

struct GroupSpec {
  GroupFamily family = GroupFamily::Cyclic;
  /// Cyclic and units: {n}. Abelian: the factors. Dihedral and quaternion:
  /// {n} with order 2n or 4n. Semidirect: {n, m, s}. PGL2: {q}.
  std::vector<u64> params;

  [[nodiscard]] std::string to_string() const;
  /// True for the families that are abelian by construction.
  [[nodiscard]] bool abelian_family() const;
  /// Cyclic factor orders for abelian families.
  [[nodiscard]] std::vector<u64> abelian_factors() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(const std::string& message, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

GroupSpec parse_group_spec(std::string_view text);
std::unique_ptr<FiniteGroup> make_group(const GroupSpec& spec);

std::string_view family_name(GroupFamily family);
/// Parses a family name as used by `sweep --family`.
GroupFamily parse_family(std::string_view name);

}  // namespace powergraph
