#include "powergraph/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace powergraph {

namespace {

void require_positive_exponent(u64 t) {
  if (t == 0) throw std::domain_error("exponent t must be positive");
}

}  // namespace

Sequence::Sequence() : terms_{1} {}

Sequence::Sequence(std::initializer_list<u64> terms) : Sequence(std::vector<u64>(terms)) {}

Sequence::Sequence(std::vector<u64> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] == 0) throw std::domain_error("sequence terms must be positive");
    if (i > 0 && terms_[i] > terms_[i - 1])
      throw std::domain_error("sequence must be non-increasing: " + to_string());
  }
  while (!terms_.empty() && terms_.back() == 1) terms_.pop_back();
  if (terms_.empty()) terms_.push_back(1);
}

std::size_t Sequence::length() const { return is_one() ? 0 : terms_.size(); }

u64 Sequence::product() const {
  u64 p = 1;
  for (u64 x : terms_) p = checked_mul(p, x);
  return p;
}

std::string Sequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < terms_.size(); ++i) os << (i ? "," : "") << terms_[i];
  os << ')';
  return os.str();
}

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit multiplication overflow");
  return r;
}

u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit addition overflow");
  return r;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  if (n == 0) throw std::domain_error("cannot factorize 0");
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> divs{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

unsigned two_adic_valuation(u64 n) {
  if (n == 0) throw std::domain_error("2-adic valuation of 0");
  return static_cast<unsigned>(__builtin_ctzll(n));
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::domain_error("euler_phi(0) is undefined");
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

u64 mult_order(u64 t, u64 d) {
  if (d == 0) throw std::domain_error("modulus must be positive");
  if (gcd(t % d, d) != 1 && d != 1)
    throw std::domain_error("mult_order requires gcd(t, d) = 1");
  if (d == 1) return 1;
  u64 order = euler_phi(d);
  for (auto [p, e] : factorize(order)) {
    while (order % p == 0 && pow_mod(t, order / p, d) == 1) order /= p;
  }
  return order;
}

NuOmegaSplit nu_omega_split(u64 n, u64 t) {
  if (n == 0) throw std::domain_error("n must be positive");
  require_positive_exponent(t);
  u64 omega = n;
  for (u64 g = gcd(omega, t); g > 1; g = gcd(omega, t)) omega /= g;
  return {n / omega, omega};
}

Sequence iterated_gcd(u64 n, u64 t) {
  if (n == 0) throw std::domain_error("n must be positive");
  require_positive_exponent(t);
  std::vector<u64> terms;
  u64 rest = n;
  for (u64 g = gcd(t, rest); g > 1; g = gcd(t, rest)) {
    terms.push_back(g);
    rest /= g;
  }
  return Sequence(std::move(terms));
}

Sequence sequence_product(const Sequence& u, const Sequence& v) {
  const std::size_t len = std::max(u.size(), v.size());
  std::vector<u64> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    const u64 a = i < u.size() ? u[i] : 1;
    const u64 b = i < v.size() ? v[i] : 1;
    out[i] = checked_mul(a, b);
    if (i > 0 && out[i] > out[i - 1])
      throw std::logic_error("coordinatewise product is not non-increasing");
  }
  return Sequence(std::move(out));
}

}  // namespace powergraph
