#include "powergraph/finite_field.hpp"

#include <map>
#include <stdexcept>

namespace powergraph {

namespace {

// Lower coefficients of a monic irreducible polynomial of degree k over GF(p):
// x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1}).
const std::map<u64, std::vector<std::uint32_t>>& irreducible_table() {
  static const std::map<u64, std::vector<std::uint32_t>> table{
      {4, {1, 1}},         // x^2 + x + 1
      {8, {1, 1, 0}},      // x^3 + x + 1
      {9, {1, 0}},         // x^2 + 1
      {16, {1, 1, 0, 0}},  // x^4 + x + 1
      {25, {3, 0}},        // x^2 + 3
      {27, {1, 2, 0}},     // x^3 + 2x + 1
  };
  return table;
}

std::vector<std::uint32_t> digits(u64 x, u64 p, std::size_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::size_t i = 0; i < k; ++i, x /= p) d[i] = static_cast<std::uint32_t>(x % p);
  return d;
}

u64 undigits(const std::vector<std::uint32_t>& d, u64 p) {
  u64 x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

}  // namespace

FiniteField::FiniteField(u64 q) : q_(q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  const auto factors = factorize(q);
  if (factors.size() != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  p_ = factors[0].first;
  const std::size_t k = factors[0].second;
  std::vector<std::uint32_t> modulus;
  if (k > 1) {
    const auto it = irreducible_table().find(q);
    if (it == irreducible_table().end())
      throw std::invalid_argument("GF(" + std::to_string(q) +
                                  ") is not supported; prime powers limited to 4, 8, 9, 16, 25, 27");
    modulus = it->second;
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (u64 a = 0; a < q; ++a) {
    const auto da = digits(a, p_, k);
    std::vector<std::uint32_t> dn(k);
    for (std::size_t i = 0; i < k; ++i) dn[i] = static_cast<std::uint32_t>((p_ - da[i]) % p_);
    neg_[a] = static_cast<std::uint32_t>(undigits(dn, p_));
    for (u64 b = 0; b < q; ++b) {
      const auto db = digits(b, p_, k);
      std::vector<std::uint32_t> sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = static_cast<std::uint32_t>((da[i] + db[i]) % p_);
      add_[a * q + b] = static_cast<std::uint32_t>(undigits(sum, p_));

      std::vector<u64> prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + u64{da[i]} * db[j]) % p_;
      // Reduce degrees >= k using x^k = -sum c_i x^i.
      for (std::size_t deg = prod.size(); deg-- > k;) {
        const u64 c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (std::size_t i = 0; i < k; ++i)
          prod[deg - k + i] = (prod[deg - k + i] + (p_ - modulus[i]) % p_ * c) % p_;
      }
      std::vector<std::uint32_t> red(k);
      for (std::size_t i = 0; i < k; ++i) red[i] = static_cast<std::uint32_t>(prod[i]);
      mul_[a * q + b] = static_cast<std::uint32_t>(undigits(red, p_));
    }
  }
  for (u64 a = 1; a < q; ++a)
    for (u64 b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint32_t>(b);
  for (u64 a = 1; a < q; ++a)
    if (inv_[a] == 0) throw std::logic_error("field table for GF(" + std::to_string(q) + ") is not a field");
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0 || a >= q_) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

}  // namespace powergraph
