#pragma once

/**
 * @file acceptance.hpp
 * @brief The acceptance suite shared by `powergraph selftest` and the
 * acceptance test binary, plus the corpora and generators it draws from.
 */

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "powergraph/group_spec.hpp"
#include "powergraph/groups.hpp"

namespace powergraph {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// "[PASS] criterion 3: <title> (<detail>, 0.01 s)".
std::string format_result(const CriterionResult& result);

/// Runs criteria 1-10 in order. When `log` is given each result line is
/// written as soon as the criterion finishes.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

/// Semidirect products C_n x|_s C_m with nm <= max_order, 2 <= s <= n+1,
/// satisfying semidirect_flower_condition.
std::vector<GroupSpec> semidirect_instances(u64 max_order);

/// The oracle sweep corpus: cyclic n <= 60, abelian products of at most three
/// factors each <= 12, dihedral n in 3..30, quaternion n in 2..15, the
/// semidirect instances with nm <= 400 and PGL(2,q) for q in {3,4,5,7,8,9}.
std::vector<GroupSpec> acceptance_corpus();

/// Random valid flower type with pistil dividing every petal and petal sum
/// at most max_sum.
FlowerType random_flower_type(std::mt19937_64& rng, u64 max_sum);

}  // namespace powergraph
