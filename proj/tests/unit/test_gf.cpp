#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tpv/errors.hpp"
#include "tpv/gf.hpp"

TEST_SUITE("gf") {
  TEST_CASE("field_make chooses the first irreducible modulus") {
    const auto& f7 = tpv::field_make(7, 1);
    CHECK(f7.modulus() == std::vector<std::uint32_t>{0, 1});
    const auto& f9 = tpv::field_make(3, 2);
    CHECK(f9.modulus() == oracle::smallest_irreducible(3, 2));
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 3}, {5, 2}, {7, 2}, {3, 4}, {5, 3}}) {
      CHECK(tpv::field_make(p, a).modulus() == oracle::smallest_irreducible(p, a));
    }
    CHECK_THROWS_AS(tpv::field_make(2, 1), tpv::InvalidArgument);
    CHECK_THROWS_AS(tpv::field_make(9, 1), tpv::InvalidArgument);
    CHECK_THROWS_AS(tpv::field_make(3, 13), tpv::ResourceLimit);
  }

  TEST_CASE("field_make is deterministic and interned") {
    CHECK(&tpv::field_make(7, 2) == &tpv::field_make(7, 2));
    CHECK(&tpv::field_of_order(49) == &tpv::field_make(7, 2));
  }

  TEST_CASE("prime field examples") {
    const auto& f = tpv::field_make(7, 1);
    tpv::FieldElem three(f, 3);
    CHECK(three.inv().code() == 5);
    CHECK(three.mult_order() == 6);
    for (std::uint32_t x = 0; x < 7; ++x) CHECK(tpv::FieldElem(f, x).frobenius().code() == x);
    CHECK_THROWS_AS(tpv::FieldElem(f, 0).inv(), tpv::DivisionByZero);
  }

  TEST_CASE("frobenius on GF(9) and GF(49)") {
    const auto& f9 = tpv::field_make(3, 2);
    const tpv::FieldElem g(f9, f9.primitive_element());
    CHECK(g.frobenius() == g.pow(3));
    for (std::uint32_t x = 0; x < 9; ++x) {
      const tpv::FieldElem e(f9, x);
      CHECK(e.frobenius().frobenius() == e);
    }
    const auto& f49 = tpv::field_make(7, 2);
    const tpv::FieldElem outside(f49, 7);  // the class of x
    CHECK(!(outside.frobenius() == outside));
  }

  TEST_CASE("mixed fields are rejected") {
    tpv::FieldElem a(tpv::field_make(5, 1), 1), b(tpv::field_make(7, 1), 1);
    CHECK_THROWS_AS(a + b, tpv::InvalidArgument);
  }

  TEST_CASE("multiplication agrees with polynomial arithmetic") {
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {7, 2}, {3, 3}, {5, 2}}) {
      const auto& f = tpv::field_make(p, a);
      const auto mod = oracle::smallest_irreducible(p, a);
      for (std::uint32_t x = 0; x < f.order(); ++x) {
        for (std::uint32_t y = 0; y < f.order(); ++y) REQUIRE(f.mul(x, y) == oracle::field_mul(x, y, p, mod));
      }
    }
  }

  TEST_CASE("property: axioms, cyclicity and frobenius homomorphism") {
    std::mt19937_64 rng(3);
    for (std::uint64_t q : {7u, 9u, 25u, 27u, 49u, 121u, 343u}) {
      const auto& f = tpv::field_of_order(q);
      std::uint64_t max_order = 0;
      for (std::uint32_t x = 1; x < q; ++x) {
        const tpv::FieldElem e(f, x);
        REQUIRE((e * e.inv()).code() == 1);
        REQUIRE((q - 1) % e.mult_order() == 0);
        max_order = std::max(max_order, e.mult_order());
      }
      CHECK(max_order == q - 1);
      for (int t = 0; t < 300; ++t) {
        const tpv::FieldElem x(f, static_cast<std::uint32_t>(rng() % q)), y(f, static_cast<std::uint32_t>(rng() % q));
        const tpv::FieldElem z(f, static_cast<std::uint32_t>(rng() % q));
        REQUIRE((x * y).frobenius() == x.frobenius() * y.frobenius());
        REQUIRE((x + y).frobenius() == x.frobenius() + y.frobenius());
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x + (-x) == tpv::FieldElem(f, 0));
      }
    }
  }
}
