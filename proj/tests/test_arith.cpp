#include <doctest.h>

#include <stdexcept>

#include <limits>

#include "powergraph/arith.hpp"

using namespace powergraph;

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(91) == 72);
  CHECK(euler_phi(97) == 96);
  CHECK(euler_phi(1024) == 512);
  CHECK_THROWS_AS((void)euler_phi(0), std::domain_error);
}

TEST_CASE("mult_order") {
  CHECK(mult_order(14, 3) == 2);
  CHECK(mult_order(2, 5) == 4);
  CHECK(mult_order(10, 3) == 1);
  CHECK(mult_order(3, 1) == 1);
  CHECK(mult_order(2, 11) == 10);
  CHECK_THROWS_AS((void)mult_order(2, 4), std::domain_error);
}

TEST_CASE("mult_order agrees with naive iteration") {
  for (u64 d = 1; d <= 120; ++d)
    for (u64 t = 1; t <= 40; ++t) {
      if (gcd(t, d) != 1) continue;
      u64 k = 1, x = t % d;
      while (x != 1 % d) {
        x = x * t % d;
        ++k;
      }
      CHECK(mult_order(t, d) == k);
    }
}

TEST_CASE("nu_omega_split and iterated_gcd") {
  CHECK(nu_omega_split(12, 2) == NuOmegaSplit{4, 3});
  CHECK(nu_omega_split(91, 14) == NuOmegaSplit{7, 13});
  CHECK(nu_omega_split(7, 3) == NuOmegaSplit{1, 7});
  CHECK(iterated_gcd(8, 4) == Sequence{4, 2});
  CHECK(iterated_gcd(12, 2) == Sequence{2, 2});
  CHECK(iterated_gcd(24, 10) == Sequence{2, 2, 2});
  CHECK(iterated_gcd(7, 3).is_one());
  CHECK_THROWS_AS((void)iterated_gcd(8, 0), std::domain_error);
}

TEST_CASE("iterated gcd multiplies out to the t-part") {
  for (u64 n = 1; n <= 300; ++n)
    for (u64 t = 1; t <= 30; ++t) CHECK(iterated_gcd(n, t).product() == nu_omega_split(n, t).nu);
}

TEST_CASE("Sequence normal form") {
  CHECK(Sequence{4, 2, 1, 1} == Sequence{4, 2});
  CHECK(Sequence{1, 1} == Sequence{});
  CHECK(Sequence{}.is_one());
  CHECK(Sequence{}.length() == 0);
  CHECK(Sequence{4, 2}.length() == 2);
  CHECK(Sequence{4, 2}.to_string() == "(4,2)");
  CHECK(Sequence{5, 3, 3}.product() == 45);
  CHECK_THROWS_AS(Sequence({2, 4}), std::domain_error);
  CHECK_THROWS_AS(Sequence({3, 0}), std::domain_error);
}

TEST_CASE("sequence_product is coordinatewise with padding") {
  CHECK(sequence_product(Sequence{4, 2}, Sequence{3}) == Sequence{12, 2});
  CHECK(sequence_product(Sequence{2, 2}, Sequence{2}) == Sequence{4, 2});
  CHECK(sequence_product(Sequence{}, Sequence{5, 5}) == Sequence{5, 5});
}

TEST_CASE("divisors, factorize, valuations") {
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK(factorize(360) == std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  CHECK(two_adic_valuation(12) == 2);
  CHECK(two_adic_valuation(7) == 0);
}

TEST_CASE("modular helpers and overflow checks") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(5, 0, 7) == 1);
  CHECK(mul_mod(std::numeric_limits<u64>::max(), 2, 1000000007) ==
        (std::numeric_limits<u64>::max() % 1000000007) * 2 % 1000000007);
  CHECK(gcd(0, 5) == 5);
  CHECK(lcm(4, 6) == 12);
  CHECK_THROWS_AS((void)checked_mul(u64{1} << 40, u64{1} << 30), std::overflow_error);
  CHECK_THROWS_AS((void)checked_add(std::numeric_limits<u64>::max(), 1), std::overflow_error);
}
