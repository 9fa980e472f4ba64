#pragma once

#include <cstdint>
#include <vector>

#include "powergraph/arith.hpp"

namespace powergraph {

/// GF(q) by lookup tables. Elements are 0..q-1, read as base-p digit
/// vectors of polynomial coefficients (lowest degree first); 0 and 1 are
/// the field's zero and one.
///
/// Supports every prime q and the prime powers 4, 8, 9, 16, 25, 27.
class FiniteField {
 public:
  explicit FiniteField(u64 q);

  [[nodiscard]] u64 order() const { return q_; }
  [[nodiscard]] u64 characteristic() const { return p_; }

  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;

 private:
  u64 q_;
  u64 p_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace powergraph
