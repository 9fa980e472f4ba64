#pragma once

/**
 * @file arith.hpp
 * @brief Number-theoretic primitives shared by the structural formulas.
 *
 * All routines work on 64-bit unsigned integers. Products that could
 * overflow are checked and raise std::overflow_error instead of wrapping.
 * An exponent t = 0 is rejected everywhere with std::domain_error.
 */

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace powergraph {

using u64 = std::uint64_t;

/// Non-increasing tuple of positive integers, stored without trailing 1s.
///
/// Two sequences that differ only by trailing 1s compare equal. The
/// all-ones sequence is stored as (1).
class Sequence {
 public:
  Sequence();  // (1)
  explicit Sequence(std::vector<u64> terms);
  Sequence(std::initializer_list<u64> terms);

  [[nodiscard]] std::span<const u64> terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] u64 operator[](std::size_t i) const { return terms_[i]; }

  /// Number of terms after stripping trailing 1s; 0 for (1).
  [[nodiscard]] std::size_t length() const;
  [[nodiscard]] bool is_one() const { return terms_.size() == 1 && terms_[0] == 1; }
  /// Product of the terms (checked).
  [[nodiscard]] u64 product() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<u64> terms_;
};

struct NuOmegaSplit {
  u64 nu = 1;
  u64 omega = 1;
  friend bool operator==(const NuOmegaSplit&, const NuOmegaSplit&) = default;
};

u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);
u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
/// All positive divisors of n, ascending.
std::vector<u64> divisors(u64 n);
/// Exponent of 2 in n (n > 0).
unsigned two_adic_valuation(u64 n);

u64 euler_phi(u64 n);

/// Multiplicative order of t modulo d; requires gcd(t, d) = 1.
u64 mult_order(u64 t, u64 d);

/// Splits n = nu * omega where omega is the greatest divisor of n coprime to t.
NuOmegaSplit nu_omega_split(u64 n, u64 t);

/// Iterated gcd of n relative to t: nu_1 = gcd(t, n),
/// nu_{i+1} = gcd(t, n / (nu_1 ... nu_i)), stopping before the first 1.
Sequence iterated_gcd(u64 n, u64 t);

/// Coordinatewise product, padding the shorter sequence with 1s.
Sequence sequence_product(const Sequence& u, const Sequence& v);

}  // namespace powergraph
