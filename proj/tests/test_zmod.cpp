#include <doctest.h>

#include <random>

#include "boxspace/errors.hpp"
#include "boxspace/zmod.hpp"

using namespace boxspace;
using namespace boxspace::zmod;

TEST_CASE("primality and powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(29));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(checked_pow(29, 2) == 841);
  CHECK_THROWS_AS(checked_pow(29, 9), ResourceError);
  CHECK(mod_reduce(-1, 25) == 24);
  CHECK(pow_mod(3, 4, 7) == 4);
  CHECK(inv_mod(3, 7) == 5u);
  CHECK_FALSE(inv_mod(3, 9).has_value());
}

TEST_CASE("residue arithmetic") {
  Residue a(-3, 25), b(7, 25);
  CHECK((a + b).value() == 4);
  CHECK((a * b).value() == 4);
  CHECK((-b).value() == 18);
  CHECK(a.inverse().has_value());
  CHECK((a * *a.inverse()).value() == 1);
  CHECK_FALSE(Residue(5, 25).is_unit());
  CHECK(Residue(26, 125).reduce(25).value() == 1);
  CHECK(b.pow(20).value() == 1);  // |(Z/25)^*| = 20
}

TEST_CASE("square roots by lifting") {
  auto r = sqrt_hensel(-1, 5, 2);
  REQUIRE(r);
  CHECK(std::min(r->plus, r->minus) == 7);
  CHECK(std::max(r->plus, r->minus) == 18);
  auto s = sqrt_hensel(4, 7, 3);
  REQUIRE(s);
  CHECK(std::min(s->plus, s->minus) == 2);
  CHECK(std::max(s->plus, s->minus) == 341);
  CHECK_FALSE(sqrt_hensel(3, 5, 1).has_value());
  CHECK_THROWS_AS(sqrt_hensel(5, 5, 2), UnsupportedInput);
  CHECK_THROWS_AS(sqrt_hensel(1, 9, 1), ParameterError);
  CHECK_THROWS_AS(sqrt_hensel(1, 2, 1), ParameterError);
}

TEST_CASE("lifted roots square to u and are the only two") {
  std::mt19937_64 rng(7);
  for (u64 q : {3ULL, 5ULL, 7ULL, 13ULL, 29ULL, 41ULL}) {
    for (unsigned n = 1; n <= 4; ++n) {
      const u64 mod = checked_pow(q, n);
      for (int t = 0; t < 100; ++t) {
        u64 x = rng() % mod;
        if (x % q == 0) continue;
        const u64 u = mul_mod(x, x, mod);
        auto r = sqrt_hensel(static_cast<i64>(u), q, n);
        REQUIRE(r);
        CHECK(mul_mod(r->plus, r->plus, mod) == u);
        CHECK((r->plus + r->minus) % mod == 0);
        CHECK((x == r->plus || x == r->minus));
      }
    }
  }
}

TEST_CASE("single lifting step preserves the root modulo the lower level") {
  // 2 is a root of -1 mod 5; its lift mod 25 is 7
  CHECK(hensel_lift_step(2, -1, 5, 2) == 7);
}

TEST_CASE("roots modulo 2q^n") {
  auto r = sqrt_hensel_even(5, 29, 1);
  REQUIRE(r);
  CHECK(mul_mod(*r, *r, 58) == 5);
  auto one = sqrt_hensel_even(1, 29, 2);
  REQUIRE(one);
  CHECK(*one == 1);
  CHECK_FALSE(sqrt_hensel_even(5, 13, 1).has_value());
}

TEST_CASE("admissible primes") {
  auto a = find_admissible_q(3, 30);
  CHECK(std::find(a.begin(), a.end(), 29) != a.end());
  CHECK(std::find(a.begin(), a.end(), 13) == a.end());
  CHECK(find_admissible_q(30, 3).empty());
  CHECK(find_admissible_q(3, 100) == std::vector<u64>{29, 41, 61, 89});
}

TEST_CASE("epsilon chain") {
  CHECK(epsilon_chain(29, 1) == std::vector<u64>{12});
  CHECK(epsilon_chain(13, 1) == std::vector<u64>{5});
  CHECK_THROWS_AS(epsilon_chain(3, 2), NoResidueError);
  const auto e = epsilon_chain(29, 3);
  for (unsigned n = 1; n <= 3; ++n) {
    const u64 mod = checked_pow(29, n);
    CHECK(mul_mod(e[n - 1], e[n - 1], mod) == mod - 1);
    if (n > 1) CHECK(e[n - 1] % checked_pow(29, n - 1) == e[n - 2]);
  }
  const auto p = LpsParams::make(5, 29, 2);
  CHECK(p.epsilon_at(1) == 12);
  CHECK_THROWS_AS(LpsParams::make(7, 29, 1), ParameterError);
  CHECK_THROWS_AS(LpsParams::make(5, 5, 1), ParameterError);
}
