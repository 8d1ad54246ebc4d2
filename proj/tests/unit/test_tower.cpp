#include <doctest.h>

#include "tpv/errors.hpp"
#include "tpv/families.hpp"
#include "tpv/tower.hpp"

using namespace tpv;

namespace {

GroupElement perm(std::size_t n, std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

GroupElement pair(const GroupElement& a, const GroupElement& b) { return GroupElement::tuple({a, b}); }

// |H : C_H(g)| by direct commutation count.
std::size_t index_by_scan(const FiniteGroup& h, const GroupElement& g) {
  std::size_t c = 0;
  for (const auto& x : h.elements()) c += x * g == g * x;
  return h.order() / c;
}

}  // namespace

TEST_SUITE("tower") {
  TEST_CASE("build_tower on C3 x S3") {
    const auto c3 = families::cyclic(3), s3 = families::symmetric(3);
    const auto h = families::direct_product({c3, s3});
    const auto t = build_tower(h, 2, {c3, s3});
    CHECK(t.kernels[0].order() == 3);
    CHECK(t.kernels[1].order() == 6);
    REQUIRE(t.first_even);
    CHECK(*t.first_even == 1);
    CHECK(t.levels[0].order() == t.kernels[0].order() * t.levels[1].order());
  }

  TEST_CASE("build_tower on a diagonal S3") {
    const auto s3 = families::symmetric(3);
    const auto t = build_tower(families::diagonal(s3, 2), 2, {s3, s3});
    CHECK(t.kernels[0].order() == 1);
    CHECK(t.levels[1].order() == 6);
    REQUIRE(t.first_even);
    CHECK(*t.first_even == 1);
  }

  TEST_CASE("build_tower on an odd group") {
    const auto c3 = families::cyclic(3), c5 = families::cyclic(5);
    const auto t = build_tower(families::direct_product({c3, c5}), 2);
    CHECK(!t.first_even);
  }

  TEST_CASE("build_tower rejects mismatched shapes") {
    CHECK_THROWS_AS(build_tower(families::symmetric(3), 2), InvalidArgument);
  }

  TEST_CASE("oddnormal examples") {
    const auto s3 = families::symmetric(3);
    const FiniteGroup c3 = FiniteGroup::closure({perm(3, {{1, 2, 3}})});
    auto r = verify_oddnormal(s3, c3, perm(3, {{1, 2}}));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("lhs") == index_by_scan(s3, perm(3, {{1, 2}})));
    CHECK(r.counts.at("lhs") == 3);
    CHECK(r.counts.at("index_N") == 3);
    CHECK(r.counts.at("index_quotient") == 1);

    const auto c6 = families::cyclic(6);
    const auto x = c6.generators().front();
    r = verify_oddnormal(c6, FiniteGroup::closure({x.pow(2)}), x.pow(3));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("lhs") == 1);

    const auto c3s3 = families::direct_product({families::cyclic(3), s3});
    const auto e3 = families::cyclic(3).generators().front();
    const FiniteGroup n = FiniteGroup::closure({pair(e3, perm(3, {})), pair(e3.identity(), perm(3, {{1, 2, 3}}))});
    const GroupElement g = pair(e3.identity(), perm(3, {{1, 2}}));
    r = verify_oddnormal(c3s3, n, g);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("lhs") == 3);
    CHECK(r.counts.at("index_N") == 3);
  }

  TEST_CASE("oddnormal preconditions give not-applicable") {
    const auto s4 = families::symmetric(4);
    const auto a4 = families::alternating(4);
    CHECK(verify_oddnormal(s4, a4, perm(4, {{1, 2}})).verdict == Verdict::NotApplicable);
    CHECK(verify_oddnormal(s4, FiniteGroup::trivial(s4.identity()), perm(4, {{1, 2, 3}})).verdict ==
          Verdict::NotApplicable);
  }

  TEST_CASE("sylowtwos examples") {
    const auto s4 = families::symmetric(4);
    const auto a4 = families::alternating(4);
    auto r = verify_sylow_fusion(s4, a4, perm(4, {{1, 2}, {3, 4}}));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("lhs") == 3);
    CHECK(r.counts.at("index_N") == 3);
    CHECK(r.counts.at("fusion_H") == 3);
    CHECK(r.counts.at("fusion_N") == 3);

    const auto d8 = families::dihedral(4);
    r = verify_sylow_fusion(d8, d8, perm(4, {{1, 2}, {3, 4}}));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("fusion_H") == r.counts.at("fusion_N"));

    const auto d8c3 = families::direct_product({d8, families::cyclic(3)});
    const auto z = pair(perm(4, {{1, 3}, {2, 4}}), families::cyclic(3).identity());
    r = verify_sylow_fusion(d8c3, d8c3, z);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("lhs") == 1);
  }

  TEST_CASE("invcentralizer examples") {
    const auto c3 = families::cyclic(3), s3 = families::symmetric(3);
    const auto t = build_tower(families::direct_product({c3, s3}), 2, {c3, s3});
    auto r = verify_tower_identity(t, pair(c3.identity(), perm(3, {{1, 2}})));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("lhs") == 3);
    CHECK(r.counts.at("k") == 2);

    const auto t2 = build_tower(families::direct_product({s3, s3}), 2, {s3, s3});
    r = verify_tower_identity(t2, pair(perm(3, {{1, 2}}), perm(3, {})));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("k") == 1);
    CHECK(r.counts.at("lhs") == 3);

    const auto c4 = families::cyclic(4);
    const auto t3 = build_tower(families::direct_product({c4, c3}), 2, {c4, c3});
    r = verify_tower_identity(t3, pair(c4.generators().front().pow(2), c3.identity()));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.counts.at("lhs") == 1);
  }

  TEST_CASE("invcentralizer with trivial image is not applicable") {
    const auto s3 = families::symmetric(3);
    const auto t = build_tower(families::direct_product({s3, s3}), 2, {s3, s3});
    CHECK(verify_tower_identity(t, pair(perm(3, {}), perm(3, {{1, 2}}))).verdict == Verdict::NotApplicable);
  }

  TEST_CASE("campaign arguments and determinism") {
    CHECK_THROWS_AS(random_identity_campaign(1, 0), InvalidArgument);
    const auto a = random_identity_campaign(3, 30);
    const auto b = random_identity_campaign(3, 30, 2);
    CHECK(to_json(a, true) == to_json(b, true));
  }

  TEST_CASE("property: kernel tower telescopes") {
    const auto s3 = families::symmetric(3), c3 = families::cyclic(3), c4 = families::cyclic(4);
    const std::vector<std::pair<FiniteGroup, std::vector<FiniteGroup>>> cases{
        {families::direct_product({c3, s3}), {c3, s3}},
        {families::diagonal(s3, 3), {s3, s3, s3}},
        {families::direct_product({s3, c4, c3}), {s3, c4, c3}},
        {families::direct_product({families::quaternion(8), s3}), {families::quaternion(8), s3}},
    };
    for (const auto& [h, factors] : cases) {
      const auto t = build_tower(h, factors.size(), factors);
      std::size_t product = 1;
      for (const auto& k : t.kernels) product *= k.order();
      REQUIRE(product == h.order());
      for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
        REQUIRE(t.levels[i].order() == t.kernels[i].order() * t.levels[i + 1].order());
        REQUIRE(is_normal(t.levels[i], t.kernels[i]));
      }
      if (t.first_even) {
        for (std::size_t i = 0; i < *t.first_even; ++i) REQUIRE(t.kernels[i].order() % 2 == 1);
      }
    }
  }

  TEST_CASE("property: every applicable involution satisfies all three identities") {
    const auto s3 = families::symmetric(3), c3 = families::cyclic(3);
    const auto h = families::direct_product({c3, s3, families::dihedral(4)});
    const auto t = build_tower(h, 3);
    for (const auto& g : involutions(h)) {
      const auto r = verify_tower_identity(t, g);
      REQUIRE(r.verdict != Verdict::Violated);
      if (r.verdict == Verdict::Verified) REQUIRE(r.counts.at("lhs") == index_by_scan(h, g));
    }
    const auto s4 = families::symmetric(4);
    for (const auto& n : normal_subgroups(s4)) {
      for (const auto& g : involutions(s4)) {
        REQUIRE(verify_oddnormal(s4, n, g).verdict != Verdict::Violated);
        REQUIRE(verify_sylow_fusion(s4, n, g).verdict != Verdict::Violated);
      }
    }
  }
}
