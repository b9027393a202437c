#include <random>

#include "doctest.h"
#include "hfk/arith.hpp"
#include "hfk/errors.hpp"
#include "oracles.hpp"

using hfk::Int;

TEST_CASE("ext_gcd examples") {
  auto r = hfk::ext_gcd(5, 1);
  CHECK(r.g == 1);
  CHECK(5 * r.x + 1 * r.y == 1);

  r = hfk::ext_gcd(12, 8);
  CHECK(r.g == 4);
  CHECK(12 * r.x + 8 * r.y == 4);

  r = hfk::ext_gcd(7, 0);
  CHECK(r.g == 7);
  CHECK(r.x == 1);
  CHECK(r.y == 0);

  CHECK_THROWS_AS(hfk::ext_gcd(0, 0), hfk::InvalidArgument);
}

TEST_CASE("ext_gcd randomized") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000LL, 1'000'000'000LL);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = dist(rng), b = dist(rng);
    if (a == 0 && b == 0) continue;
    const auto r = hfk::ext_gcd(hfk::to_int(a), hfk::to_int(b));
    CHECK(r.g == oracle::gcd(a, b));
    CHECK(hfk::to_int(a) * r.x + hfk::to_int(b) * r.y == r.g);
    CHECK(hfk::divides(r.g, hfk::to_int(a)));
    CHECK(hfk::divides(r.g, hfk::to_int(b)));
  }
}

TEST_CASE("inverse_mod") {
  CHECK(hfk::inverse_mod(3, 7) == 5);
  CHECK(hfk::inverse_mod(-1, 5) == 4);
  CHECK_THROWS(hfk::inverse_mod(2, 4));
  for (int m = 2; m < 60; ++m) {
    for (int a = 1; a < m; ++a) {
      if (oracle::gcd(a, m) != 1) continue;
      const Int inv = hfk::inverse_mod(a, m);
      CHECK(hfk::mod_floor(inv * a, m) == 1 % m);
    }
  }
}

TEST_CASE("jacobi examples") {
  CHECK(hfk::jacobi(5, 11) == 1);
  CHECK(hfk::jacobi(2, 5) == -1);
  for (int m = 3; m < 50; m += 2) CHECK(hfk::jacobi(1, m) == 1);
}

TEST_CASE("jacobi matches enumeration for odd primes below 100") {
  for (int l = 3; l < 100; l += 2) {
    if (!oracle::is_prime(l)) continue;
    for (int a = -l; a < 2 * l; ++a) CHECK(hfk::jacobi(a, l) == oracle::legendre(a, l));
  }
}

TEST_CASE("is_prime") {
  CHECK(hfk::is_prime(13));
  CHECK_FALSE(hfk::is_prime(1));
  CHECK_FALSE(hfk::is_prime(561));
  CHECK_FALSE(hfk::is_prime(0));
  CHECK(hfk::is_prime(-7));  // primality of |n|
  CHECK_FALSE(hfk::is_prime(-1));
  for (int n = 0; n < 20000; ++n) CHECK(hfk::is_prime(n) == oracle::is_prime(n));
  // strong pseudoprime to bases 2..37 but composite
  CHECK_FALSE(hfk::is_prime(Int("3825123056546413051")));
  CHECK(hfk::is_prime(Int("2305843009213693951")));                        // 2^61 - 1
  CHECK(hfk::is_prime(Int("170141183460469231731687303715884105727")));    // 2^127 - 1
  CHECK_FALSE(hfk::is_prime(Int("170141183460469231731687303715884105729")));
}

TEST_CASE("sqrt_mod_prime examples") {
  CHECK(hfk::sqrt_mod_prime(5, 11) == 4);
  CHECK(hfk::sqrt_mod_prime(0, 13) == 0);
  CHECK(hfk::sqrt_mod_prime(12, 13) == 5);
  CHECK_THROWS_AS(hfk::sqrt_mod_prime(2, 5), hfk::NonResidue);
}

TEST_CASE("sqrt_mod_prime matches enumeration for primes below 200") {
  for (int l = 3; l < 200; l += 2) {
    if (!oracle::is_prime(l)) continue;
    for (int a = 0; a < l; ++a) {
      const auto rs = oracle::roots(a, l);
      if (rs.empty()) {
        CHECK_THROWS_AS(hfk::sqrt_mod_prime(a, l), hfk::NonResidue);
      } else {
        const Int x = hfk::sqrt_mod_prime(a, l);
        CHECK(x == rs.front());  // smaller root
      }
    }
  }
}

TEST_CASE("sqrt_mod examples") {
  const auto z = hfk::sqrt_mod(9, 52);
  REQUIRE(z);
  CHECK(hfk::mod_floor(*z * *z, 52) == 9);
  for (int m = 2; m < 30; ++m) {
    auto one = hfk::sqrt_mod(1, m);
    REQUIRE(one);
    CHECK(hfk::mod_floor(*one * *one, m) == 1 % m);
  }
  CHECK_FALSE(hfk::sqrt_mod(2, 4));
  CHECK_THROWS(hfk::sqrt_mod(1, 1));
}

TEST_CASE("sqrt_mod matches enumeration for all moduli up to 500") {
  for (int m = 2; m <= 500; ++m) {
    for (int a = 0; a < m; ++a) {
      const auto got = hfk::sqrt_mod(a, m);
      REQUIRE(got.has_value() == oracle::has_root(a, m));
      if (got) CHECK(hfk::mod_floor(*got * *got - a, m) == 0);
    }
  }
}

TEST_CASE("sqrt_mod beyond the factorization cap") {
  CHECK_THROWS_AS(hfk::sqrt_mod(4, Int("1000000000039") * 3, Int("1000000000000")), hfk::ModulusTooLarge);
}

TEST_CASE("factorize examples") {
  auto f = hfk::factorize(45);
  CHECK(f.sign == 1);
  CHECK(f.factors == std::vector<hfk::PrimePower>{{3, 2}, {5, 1}});
  f = hfk::factorize(-5);
  CHECK(f.sign == -1);
  CHECK(f.factors == std::vector<hfk::PrimePower>{{5, 1}});
  f = hfk::factorize(77);
  CHECK(f.factors == std::vector<hfk::PrimePower>{{7, 1}, {11, 1}});
  CHECK_THROWS(hfk::factorize(0));
}

TEST_CASE("squarefree_part examples") {
  CHECK(hfk::squarefree_part(45) == 5);
  CHECK(hfk::squarefree_part(-12) == -3);
  CHECK(hfk::squarefree_part(7) == 7);
  CHECK(hfk::squarefree_part(1) == 1);
}

TEST_CASE("factorize and squarefree_part reconstruct for |n| <= 10^5") {
  for (int n = -100000; n <= 100000; ++n) {
    if (n == 0) continue;
    const auto f = hfk::factorize(n);
    REQUIRE(f.value() == n);
    Int prev = 1;
    Int core = f.sign;
    for (const auto& pp : f.factors) {
      CHECK(pp.prime > prev);
      CHECK(pp.exponent >= 1);
      prev = pp.prime;
      if (pp.exponent % 2 == 1) core *= pp.prime;
    }
    const Int sf = hfk::squarefree_part(n);
    CHECK(sf == core);
    // n / sf is a perfect square
    Int quotient = Int(n) / sf;
    CHECK(Int(n) == quotient * sf);
    CHECK(mpz_perfect_square_p(quotient.get_mpz_t()) != 0);
  }
}

TEST_CASE("valuation2") {
  CHECK(hfk::valuation2(1) == 0);
  CHECK(hfk::valuation2(8) == 3);
  CHECK(hfk::valuation2(-12) == 2);
  CHECK(hfk::valuation2(500) == 2);
}
