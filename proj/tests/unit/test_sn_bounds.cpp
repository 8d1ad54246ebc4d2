#include <doctest.h>

#include <cmath>

#include "tpv/errors.hpp"
#include "tpv/families.hpp"
#include "tpv/sn_bounds.hpp"

using namespace tpv;

TEST_SUITE("sn-bounds") {
  TEST_CASE("primitivity") {
    CHECK(is_primitive(families::symmetric(4)));
    CHECK(is_primitive(families::alternating(4)));
    CHECK(is_primitive(families::cyclic(7)));
    CHECK(is_primitive(families::dihedral(5)));
    CHECK(!is_primitive(families::cyclic(8)));
    CHECK(!is_primitive(families::dihedral(6)));
    CHECK(!is_primitive(families::dihedral(4)));
    CHECK(!is_primitive(families::on_pairs(families::symmetric(4))));
    CHECK(is_primitive(families::on_pairs(families::symmetric(5))));
    CHECK(is_primitive(families::psl2_natural(7)));
    CHECK_THROWS_AS(is_primitive(families::gl(2, 3)), InvalidArgument);
  }

  TEST_CASE("odd order bound on C7:C3") {
    const auto r = sn_bound_check(SnBoundKind::OddSn, families::affine(7, 3));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("order") == 21);
    CHECK(21.0L < std::pow(7.0L, std::log2(7.0L)));
    const long double rhs = std::pow(7.0L, std::log2(7.0L));
    CHECK(rhs > 235.0L);
    CHECK(rhs < 236.0L);
  }

  TEST_CASE("involution bound on S5 and A4") {
    const auto r = sn_bound_check(SnBoundKind::SnInvolutions, families::symmetric(5));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("best_class_size") == 10);
    CHECK(r.counts.at("bound_squared") == 42 * 42 * 42);
    CHECK(15 * 15 < 42 * 42 * 42);  // double transpositions also fit
    const auto a4 = sn_bound_check(SnBoundKind::SnInvolutions, families::alternating(4));
    CHECK(a4.verdict == Verdict::Verified);
    CHECK(a4.counts.at("best_class_size") == 3);
  }

  TEST_CASE("not applicable cases") {
    CHECK(sn_bound_check(SnBoundKind::OddSn, families::symmetric(5)).verdict == Verdict::NotApplicable);
    CHECK(sn_bound_check(SnBoundKind::SnInvolutions, families::affine(7, 3)).verdict == Verdict::NotApplicable);
    CHECK(sn_bound_check(SnBoundKind::SnInvolutions, families::dihedral(4)).verdict == Verdict::NotApplicable);
    CHECK(sn_bound_check(SnBoundKind::SnInvolutions, families::symmetric(2)).verdict == Verdict::NotApplicable);
  }

  TEST_CASE("property: instances are primitive and satisfy both bounds") {
    std::size_t instances = 0;
    for (std::size_t d = 3; d <= 13; ++d) {
      for (const auto& inst : primitive_instances(d)) {
        CAPTURE(inst.name);
        REQUIRE(is_primitive(inst.group));
        ++instances;
        const bool odd = inst.group.order() % 2 == 1;
        const auto r = sn_bound_check(odd ? SnBoundKind::OddSn : SnBoundKind::SnInvolutions, inst.group);
        REQUIRE(r.verdict == Verdict::Verified);
        if (odd) {
          const long double lhs = std::log2(static_cast<long double>(inst.group.order()));
          const long double rhs = std::log2(static_cast<long double>(d)) * std::log2(static_cast<long double>(d));
          REQUIRE(lhs < rhs);
        }
      }
    }
    CHECK(instances >= 10);
  }
}
