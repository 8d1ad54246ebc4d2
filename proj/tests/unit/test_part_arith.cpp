#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tpv/errors.hpp"
#include "tpv/part_arith.hpp"

using tpv::BigInt;

TEST_SUITE("part-arith") {
  TEST_CASE("part_pow examples") {
    CHECK(tpv::part_pow(48, 2) == 16);
    CHECK(tpv::part_pow(7, 2) == 1);
    CHECK(tpv::part_pow(960, 2) == oracle::part(960, 2));
    CHECK(tpv::part_pow(960, 2) == 64);
    CHECK_THROWS_AS(tpv::part_pow(12, 4), tpv::InvalidArgument);
  }

  TEST_CASE("part_coprime examples") {
    CHECK(tpv::part_coprime(48, 2) == 3);
    CHECK(tpv::part_coprime(56, 7) == 56 / oracle::part(56, 7));
    CHECK(tpv::part_coprime(1, 5) == 1);
    CHECK_THROWS_AS(tpv::part_coprime(10, 9), tpv::InvalidArgument);
  }

  TEST_CASE("heart examples") {
    CHECK(tpv::heart(BigInt(21)) == oracle::heart(21));
    CHECK(tpv::heart(BigInt(21)) == 21);
    CHECK(tpv::heart(BigInt(1)) == 1);
    CHECK(tpv::heart(BigInt(20)) == oracle::heart(20));
    CHECK(tpv::heart(BigInt(9)) == oracle::heart(9));
    CHECK(tpv::heart(BigInt(9)) == 3);
  }

  TEST_CASE("heart_coprime examples") {
    CHECK(tpv::heart_coprime(56, 7) == oracle::heart_coprime(56, 7));
    CHECK(tpv::heart_coprime(21, 7) == oracle::heart_coprime(21, 7));
    CHECK(tpv::heart_coprime(21, 7) == 3);
    CHECK(tpv::heart_coprime(1, 7) == 1);
  }

  TEST_CASE("heart_coprime agrees with the literal definition") {
    for (std::uint64_t k = 1; k <= 3000; ++k) {
      for (std::uint64_t p : {5u, 7u, 13u}) {
        REQUIRE(tpv::heart_coprime(BigInt(k), BigInt(p)) == oracle::heart_coprime(k, p));
      }
    }
  }

  TEST_CASE("geom_sum examples") {
    CHECK(tpv::geom_sum(7, 2) == 8);
    CHECK(tpv::geom_sum(9, 3) == 91);
    CHECK(tpv::geom_sum(31, 4) == 31 * 31 * 31 + 31 * 31 + 31 + 1);
    CHECK(tpv::geom_sum(31, 4) == 30784);
  }

  TEST_CASE("gl_order_two_part examples") {
    CHECK(tpv::gl_order_two_part(2, 7) == oracle::part(oracle::gl_order(2, 7), 2));
    CHECK(tpv::gl_order_two_part(2, 7) == 32);
    CHECK(tpv::gl_order_two_part(2, 31) == 2 * 64);
    CHECK(tpv::gl_order_two_part(4, 31) == 2 * 64 * 2 * 128);
    CHECK_THROWS_AS(tpv::gl_order_two_part(2, 8), tpv::InvalidArgument);
  }

  TEST_CASE("gl_order matches the product formula") {
    CHECK(tpv::gl_order(2, 7) == 2016);
    CHECK(tpv::gl_order(3, 7) == 33784128);
    for (unsigned n = 1; n <= 3; ++n) {
      for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u}) CHECK(tpv::gl_order(n, q) == oracle::gl_order(n, q));
    }
  }

  TEST_CASE("property: part_pow times part_coprime recovers k") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
      const std::uint64_t k = 1 + rng() % 1000000;
      const std::uint64_t w = std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}[rng() % 6];
      REQUIRE(tpv::part_pow(k, w) * tpv::part_coprime(k, w) == k);
      REQUIRE(tpv::part_pow(k, w) == oracle::part(k, w));
    }
  }

  TEST_CASE("property: heart divides k, is multiplicative and monotone") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
      const std::uint64_t a = 1 + rng() % 20000, b = 1 + rng() % 20000;
      const BigInt ha = tpv::heart(BigInt(a));
      REQUIRE(a % ha == 0);
      REQUIRE(ha == oracle::heart(a));
      if (std::gcd(a, b) == 1 && (a % 3 != 0 || b % 3 != 0)) {
        REQUIRE(tpv::heart(BigInt(a * b)) == ha * tpv::heart(BigInt(b)));
      }
      const BigInt hab = tpv::heart(BigInt(a * b));
      REQUIRE(hab % ha == 0);
    }
  }

  TEST_CASE("property: two-part divides the full order") {
    for (unsigned n = 1; n <= 6; ++n) {
      for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u, 29u, 31u, 37u, 41u, 43u, 47u, 49u}) {
        const BigInt order = tpv::gl_order(n, q);
        const BigInt two = tpv::gl_order_two_part(n, q);
        REQUIRE(order % two == 0);
        REQUIRE((order / two) % 2 == 1);
      }
    }
  }

  TEST_CASE("values beyond 64 bits stay exact") {
    const BigInt big = tpv::gl_order(6, 49);
    CHECK(big > BigInt(std::numeric_limits<std::uint64_t>::max()));
    tpv::PartedInteger f(big);
    BigInt product = 1;
    for (const auto& [p, e] : f.factors()) {
      CHECK(tpv::is_prime(p));
      product *= boost::multiprecision::pow(p, e);
    }
    CHECK(product == big);
  }
}
