#include <random>

#include "doctest.h"
#include "hfk/errors.hpp"
#include "hfk/seifert.hpp"
#include "hfk/witness.hpp"
#include "oracles.hpp"

using hfk::Int;
using hfk::LensSpace;
using hfk::SurfaceParams;

namespace {

// The identity, written out independently with machine integers.
std::int64_t identity(std::int64_t p, std::int64_t q, const std::int64_t (&s)[5]) {
  const auto [a, b, c, u, v] = s;
  return p * (c * c + c - a * b) - q * (b * u * u + (2 * c + 1) * u * v + a * v * v);
}

void check_sound(const hfk::WitnessCertificate& cert) {
  CHECK(hfk::certificate_is_sound(cert));
  const Int value = hfk::signed_identity(cert.space, cert.params);
  CHECK(value == cert.epsilon);
  const auto base = hfk::solve_bezout(cert.space);
  CHECK(cert.space.p() * cert.s_k - cert.space.q() * cert.r_k == 1);
  CHECK(cert.r_k == base.r0 + cert.k * cert.space.p());
}

}  // namespace

TEST_CASE("LensSpace validation") {
  CHECK_THROWS_AS(LensSpace(1, 1), hfk::InvalidArgument);
  CHECK_THROWS_AS(LensSpace(4, 2), hfk::InvalidArgument);
  CHECK(LensSpace(5, 7).normalized() == LensSpace(5, 2));
  CHECK(LensSpace(5, -1).normalized() == LensSpace(5, 4));
  CHECK(LensSpace(7, 3).name() == "L(7,3)");
}

TEST_CASE("solve_bezout examples") {
  auto b = hfk::solve_bezout(LensSpace(5, 3));
  CHECK(b.r0 == 3);
  CHECK(b.s0 == 2);
  b = hfk::solve_bezout(LensSpace(5, 1));
  CHECK(b.r0 == 4);
  CHECK(b.s0 == 1);
  b = hfk::solve_bezout(LensSpace(2, 1));
  CHECK(b.r0 == 1);
  CHECK(b.s0 == 1);
}

TEST_CASE("solve_bezout normalization") {
  for (int p = 2; p <= 60; ++p) {
    for (int q = -p; q <= 2 * p; ++q) {
      if (q == 0 || oracle::gcd(p, q) != 1) continue;
      const LensSpace space(p, q);
      const auto b = hfk::solve_bezout(space);
      CHECK(b.r0 >= 1);
      CHECK(b.r0 <= p - 1);
      CHECK(p * b.s0 - q * b.r0 == 1);
      CHECK(p * b.s(3, space) - q * b.r(3, space) == 1);
    }
  }
}

TEST_CASE("verify_witness examples") {
  auto cert = hfk::verify_witness(LensSpace(5, 1), {0, 0, 0, 1, 1});
  REQUIRE(cert);
  CHECK(cert->epsilon == -1);
  check_sound(*cert);

  cert = hfk::verify_witness(LensSpace(5, 3), {0, 0, 1, 1, 1});
  REQUIRE(cert);
  CHECK(cert->epsilon == 1);
  CHECK(cert->k == 0);
  check_sound(*cert);

  CHECK_FALSE(hfk::verify_witness(LensSpace(5, 1), {0, 0, 0, 0, 0}));
}

TEST_CASE("signed_identity matches an independent evaluation") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> modulus(2, 200);
  for (int i = 0; i < 3000; ++i) {
    const int p = modulus(rng);
    int q = small(rng);
    if (q == 0 || oracle::gcd(p, q) != 1) continue;
    const std::int64_t s[5] = {small(rng), small(rng), small(rng), small(rng), small(rng)};
    const SurfaceParams params{s[0], s[1], s[2], s[3], s[4]};
    CHECK(hfk::signed_identity(LensSpace(p, q), params) == identity(p, q, s));
  }
}

TEST_CASE("construct_witness examples") {
  auto cert = hfk::construct_witness(LensSpace(7, 1));
  CHECK(cert.params == SurfaceParams{10, 13, 11, 1, 0});
  CHECK(cert.epsilon == 1);
  CHECK(cert.r_k == 13);
  CHECK(cert.s_k == 2);
  CHECK(cert.method == hfk::WitnessMethod::constructed);
  check_sound(cert);

  cert = hfk::construct_witness(LensSpace(2, 1));
  CHECK(cert.params == SurfaceParams{0, 3, 1, 1, 0});
  CHECK(cert.epsilon == 1);
  CHECK(cert.r_k == 3);
  CHECK(cert.s_k == 2);

  cert = hfk::construct_witness(LensSpace(5, 2));
  CHECK(cert.method == hfk::WitnessMethod::brute_force);
  check_sound(cert);
}

TEST_CASE("construct_witness surfaces a tiny fallback box") {
  hfk::WitnessOptions options;
  options.fallback_box = 0;
  CHECK_THROWS_AS(hfk::construct_witness(LensSpace(5, 2), options), hfk::SearchExhausted);
}

TEST_CASE("brute_search examples") {
  auto cert = hfk::brute_search(LensSpace(5, 1), 1);
  REQUIRE(cert);
  check_sound(*cert);
  CHECK(cert->method == hfk::WitnessMethod::brute_force);

  cert = hfk::brute_search(LensSpace(5, 4), 1);
  REQUIRE(cert);
  check_sound(*cert);
  CHECK(hfk::verify_witness(LensSpace(5, 4), {1, -1, 0, 0, 1}));

  CHECK_FALSE(hfk::brute_search(LensSpace(3, 1), 0));
  CHECK_THROWS_AS(hfk::brute_search(LensSpace(3, 1), -1), hfk::InvalidArgument);
}

TEST_CASE("brute_search returns the lexicographically first hit") {
  const LensSpace space(7, 3);
  const auto cert = hfk::brute_search(space, 2);
  REQUIRE(cert);
  std::int64_t first[5] = {0, 0, 0, 0, 0};
  bool found = false;
  for (std::int64_t a = -2; a <= 2 && !found; ++a)
    for (std::int64_t b = -2; b <= 2 && !found; ++b)
      for (std::int64_t c = -2; c <= 2 && !found; ++c)
        for (std::int64_t u = -2; u <= 2 && !found; ++u)
          for (std::int64_t v = -2; v <= 2 && !found; ++v) {
            const std::int64_t s[5] = {a, b, c, u, v};
            const std::int64_t value = identity(7, 3, s);
            if (value == 1 || value == -1) {
              std::copy(s, s + 5, first);
              found = true;
            }
          }
  REQUIRE(found);
  CHECK(cert->params == SurfaceParams{first[0], first[1], first[2], first[3], first[4]});
}

TEST_CASE("construct_witness and brute_search agree for p <= 30") {
  for (int p = 2; p <= 30; ++p) {
    for (int q = 1; q < p; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      const LensSpace space(p, q);
      CAPTURE(space.name());
      const auto constructed = hfk::construct_witness(space);
      check_sound(constructed);

      // box 4 hits exactly when enumeration finds a solution in box 4
      bool exists = false;
      for (std::int64_t a = -4; a <= 4 && !exists; ++a)
        for (std::int64_t b = -4; b <= 4 && !exists; ++b)
          for (std::int64_t c = -4; c <= 4 && !exists; ++c)
            for (std::int64_t u = -4; u <= 4 && !exists; ++u)
              for (std::int64_t v = -4; v <= 4 && !exists; ++v) {
                const std::int64_t s[5] = {a, b, c, u, v};
                const std::int64_t value = identity(p, q, s);
                exists = value == 1 || value == -1;
              }
      CHECK(hfk::brute_search(space, 4).has_value() == exists);

      const auto brute = hfk::brute_search_growing(space, 14);
      REQUIRE(brute);
      check_sound(*brute);
    }
  }
}

TEST_CASE("some small spaces need a box wider than 4") {
  CHECK_FALSE(hfk::brute_search(LensSpace(19, 16), 4));
  CHECK(hfk::brute_search(LensSpace(19, 16), 5));
  CHECK_FALSE(hfk::brute_search(LensSpace(29, 26), 13));
  CHECK(hfk::brute_search(LensSpace(29, 26), 14));
}

TEST_CASE("construct_witness keeps q literal") {
  for (int q : {8, -3, 13}) {
    const LensSpace space(5, q);
    const auto cert = hfk::construct_witness(space);
    CHECK(cert.space.q() == q);
    check_sound(cert);
  }
}

TEST_CASE("certificates are rejected when tampered with") {
  auto cert = hfk::construct_witness(LensSpace(11, 4));
  REQUIRE(hfk::certificate_is_sound(cert));
  auto bad = cert;
  bad.k += 1;
  CHECK_FALSE(hfk::certificate_is_sound(bad));
  bad = cert;
  bad.params.a += 1;
  CHECK_FALSE(hfk::certificate_is_sound(bad));
  bad = cert;
  bad.epsilon = -bad.epsilon;
  CHECK_FALSE(hfk::certificate_is_sound(bad));
}

TEST_CASE("verify_witness agrees with the homology cobordism test") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(-3, 3);
  int hits = 0;
  for (int p = 2; p <= 12; ++p) {
    for (int q = 1; q < p; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      const LensSpace space(p, q);
      for (int i = 0; i < 400; ++i) {
        const SurfaceParams s{small(rng), small(rng), small(rng), small(rng), small(rng)};
        const bool verified = hfk::verify_witness(space, s).has_value();
        CHECK(verified == hfk::is_homology_cobordism(hfk::seifert_matrix_lens(space, s), p));
        hits += verified;
      }
    }
  }
  CHECK(hits > 50);
}

TEST_CASE("witness method names") {
  for (auto m : {hfk::WitnessMethod::constructed, hfk::WitnessMethod::brute_force, hfk::WitnessMethod::supplied}) {
    CHECK(hfk::parse_witness_method(hfk::to_string(m)) == m);
  }
  CHECK_THROWS_AS(hfk::parse_witness_method("builtin"), hfk::InvalidArgument);
}
