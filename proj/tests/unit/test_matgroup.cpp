#include <doctest.h>

#include "oracles.hpp"
#include "tpv/errors.hpp"
#include "tpv/families.hpp"
#include "tpv/matgroup.hpp"

using namespace tpv;

namespace {

oracle::Mat to_plain(const Matrix& m) { return oracle::Mat(m.entries().begin(), m.entries().end()); }

// Recount a descriptor over a prime field with the test-side matrix closure.
std::pair<std::size_t, std::size_t> plain_census(const SylowTwoDescriptor& d) {
  std::vector<oracle::Mat> gens;
  for (const auto& g : d.generators) gens.push_back(to_plain(g.as_matrix()));
  const auto n = d.context.n();
  const auto p = d.context.field().p();
  const auto group = oracle::mat_closure(gens, n, p);
  return {group.size(), oracle::mat_involutions(group, n, p)};
}

std::size_t wreath_oracle(std::uint64_t q) {
  const auto base = sylow2_gl2(q);
  const auto w = families::wreath(base.group, families::cyclic(2));
  return involutions(w).size();
}

}  // namespace

TEST_SUITE("matgroup") {
  TEST_CASE("gl_context orders and flags") {
    CHECK(gl_context(2, 7, 1).order() == oracle::gl_order(2, 7));
    CHECK(gl_context(2, 7, 1).order() == 2016);
    CHECK(gl_context(1, 7, 1).order() == 6);
    CHECK(gl_context(3, 7, 1).order() == 33784128);
    CHECK(gl_context(2, 7, 1).flags().lemma_hypothesis());
    CHECK(!gl_context(2, 5, 1).flags().lemma_hypothesis());
    CHECK(!gl_context(2, 11, 1).flags().lemma_hypothesis());
    CHECK_THROWS_AS(gl_context(2, 2, 1), InvalidArgument);
  }

  TEST_CASE("Sylow 2-subgroup of GL_2(7): size 32, nine involutions") {
    const auto d = sylow2_gl2(7);
    CHECK(d.construction == SylowConstruction::Presentation4q1);
    CHECK(d.group.order() == 32);
    CHECK(d.census.total == 9);
    CHECK(plain_census(d) == std::pair<std::size_t, std::size_t>{32, 9});
  }

  TEST_CASE("Sylow 2-subgroup of GL_2(31): 33 involutions, one central") {
    const auto d = sylow2_gl2(31);
    CHECK(d.group.order() == 128);
    CHECK(d.census.total == 33);
    CHECK(d.census.central == 1);
    CHECK(plain_census(d) == std::pair<std::size_t, std::size_t>{128, 33});
  }

  TEST_CASE("GL_2(19) Sylow order follows the two-part formula") {
    const auto d = sylow2_gl2(19);
    CHECK(BigInt(d.group.order()) == oracle::part(oracle::gl_order(2, 19), 2));
    CHECK(d.group.order() == 16);
    CHECK(d.census.total <= 21);
    CHECK(plain_census(d).second == d.census.total);
  }

  TEST_CASE("presentation relations") {
    for (std::uint64_t q : {7u, 11u, 19u, 23u, 27u, 31u, 43u}) {
      CAPTURE(q);
      const auto d = sylow2_gl2(q);
      REQUIRE(d.presentation);
      CHECK(presentation_relations_hold(*d.presentation, q));
      CHECK(d.presentation->a_order == 2 * oracle::part(q + 1, 2));
    }
    CHECK_THROWS_AS(sylow2_gl2(13), InvalidArgument);
  }

  TEST_CASE("sylow2_gl examples") {
    const auto d47 = sylow2_gl(4, 7);
    CHECK(d47.construction == SylowConstruction::WreathEven);
    CHECK(d47.group.order() == 2048);
    CHECK(d47.census.total == 131);
    CHECK(d47.census.total == (9 + 1) * (9 + 1) - 1 + 32);
    CHECK(d47.census.total == wreath_oracle(7));
    CHECK(d47.census.central == 1);

    const auto d37 = sylow2_gl(3, 7);
    CHECK(d37.construction == SylowConstruction::OddSplit);
    CHECK(d37.group.order() == 64);
    CHECK(d37.census.total == 2 * 9 + 1);
    CHECK(plain_census(d37) == std::pair<std::size_t, std::size_t>{64, 19});

    const auto d213 = sylow2_gl(2, 13);
    CHECK(d213.construction == SylowConstruction::DiagonalWreath);
    CHECK(BigInt(d213.group.order()) == gl_order_two_part(2, 13));
    CHECK(d213.group.order() == 32);
    CHECK(plain_census(d213).second == d213.census.total);
  }

  TEST_CASE("involution_census of the centre") {
    const auto& f = field_make(7, 1);
    FiniteGroup pm = FiniteGroup::closure({GroupElement(Matrix::scalar(f, 2, f.neg(1)))});
    const auto c = involution_census(pm, gl_context(2, 7, 1));
    CHECK(c.total == 1);
    CHECK(c.central == 1);
    CHECK_THROWS_AS(involution_census(pm, gl_context(3, 7, 1)), InvalidArgument);
  }

  TEST_CASE("statement checks") {
    const auto s1 = verify_sylowtwoingln(1, 3, 19);
    CHECK(s1.verdict == Verdict::Verified);
    CHECK(s1.counts.at("sylow_order") == oracle::part(oracle::gl_order(3, 19), 2));
    CHECK(s1.counts.at("bound") == 381);

    const auto s3 = verify_sylowtwoingln(3, 2, 7);
    CHECK(s3.verdict == Verdict::Verified);
    CHECK(s3.counts.at("involutions") == 9);
    CHECK(s3.counts.at("bound") == 9);
    CHECK(s3.counts.at("relations_hold") == 1);

    const auto s4 = verify_sylowtwoingln(4, 4, 7);
    CHECK(s4.verdict == Verdict::Verified);
    CHECK(s4.counts.at("involutions") == 131);
    CHECK(s4.counts.at("bound") == 400);

    CHECK(verify_sylowtwoingln(3, 2, 13).verdict == Verdict::NotApplicable);
    CHECK(verify_sylowtwoingln(1, 4, 31).verdict == Verdict::NotApplicable);
    CHECK(verify_sylowtwoingln(4, 2, 7).verdict == Verdict::NotApplicable);
    CHECK(verify_sylowtwoingln(5, 1, 13).verdict == Verdict::NotApplicable);
    CHECK(verify_sylowtwoingln(3, 2, 11).verdict == Verdict::NotApplicable);
    CHECK(verify_sylowtwoingln(5, 2, 13).verdict == Verdict::Verified);
    CHECK(verify_sylowtwoingln(5, 3, 13).verdict == Verdict::Verified);
  }

  TEST_CASE("statement checks degrade to skipped under a small cap") {
    const auto r = verify_sylowtwoingln(4, 4, 7, 100);
    CHECK(r.verdict == Verdict::SkippedResource);
    CHECK(r.counts.count("partial_count") == 1);
  }

  TEST_CASE("census rows") {
    CHECK(census_csv_header() == "n,q,construction,order,involutions,central,bound,verdict");
    const auto row = census_row(2, 7);
    CHECK(to_csv(row) == "2,7,Presentation4q1,32,9,1,9,within");
  }

  TEST_CASE("property: constructed groups have Sylow order") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u}) {
        CAPTURE(n);
        CAPTURE(q);
        const auto d = sylow2_gl(n, q);
        REQUIRE(BigInt(d.group.order()) == gl_order_two_part(static_cast<unsigned>(n), q));
        REQUIRE(BigInt(d.group.order()) == oracle::part(oracle::gl_order(static_cast<unsigned>(n), q), 2));
        REQUIRE(d.census.total >= 1);
        REQUIRE(d.census.central <= 1);
        for (const auto& x : involutions(d.group)) REQUIRE((x * x).is_identity());
      }
    }
  }

  TEST_CASE("property: wreath census identity") {
    for (std::uint64_t q : {3u, 7u, 11u, 19u}) {
      CAPTURE(q);
      const auto base = sylow2_gl2(q);
      const std::size_t i = base.census.total;
      const std::size_t expected = (i + 1) * (i + 1) - 1 + base.group.order();
      CHECK(wreath_oracle(q) == expected);
      CHECK(sylow2_gl(4, q).census.total == expected);
    }
  }
}
