#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tpv/errors.hpp"
#include "tpv/families.hpp"
#include "tpv/lemma_a.hpp"

using namespace tpv;

namespace {

oracle::Table table_of(const FiniteGroup& g) {
  std::vector<oracle::Perm> elems;
  for (const auto& x : g.elements()) elems.push_back(x.as_permutation().images());
  return oracle::cayley(elems);
}

std::uint32_t identity_index(const FiniteGroup& g) { return *g.index_of(g.identity()); }

// Minimum heart part over all involutions, by direct commutation counts.
std::uint64_t brute_best_part(const FiniteGroup& h, std::uint64_t p) {
  std::uint64_t best = 0;
  for (const auto& g : h.elements()) {
    if (g.is_identity() || !(g * g).is_identity()) continue;
    std::size_t c = 0;
    for (const auto& x : h.elements()) c += x * g == g * x;
    const std::uint64_t part = oracle::heart_coprime(h.order() / c, p);
    if (best == 0 || part < best) best = part;
  }
  return best;
}

FiniteGroup conjugate_group(const FiniteGroup& h, const GroupElement& x) {
  std::vector<GroupElement> gens;
  for (const auto& s : h.generators()) gens.push_back(s.conjugate(x));
  return FiniteGroup::closure(gens);
}

}  // namespace

TEST_SUITE("lemma-a") {
  TEST_CASE("S4 lattice: 30 subgroups in 11 classes") {
    const auto s4 = families::symmetric(4);
    const auto t = table_of(s4);
    const auto subs = oracle::subgroups_upto_three_generators(t, identity_index(s4));
    CHECK(subs.size() == 30);
    CHECK(oracle::subgroup_classes(t, subs) == 11);
    SubgroupStream stream(s4);
    CHECK(stream.items().size() == 11);
    CHECK(stream.total_subgroups() == 30);
    CHECK(count_subgroups_directly(s4) == 30);
  }

  TEST_CASE("property: lattice counts agree with the subset-closure oracle") {
    for (const auto& g : {families::alternating(5), families::dihedral(6), families::quaternion(16),
                          families::affine(13, 12), families::on_pairs(families::symmetric(4))}) {
      const auto t = table_of(g);
      const auto subs = oracle::subgroups_upto_three_generators(t, identity_index(g));
      SubgroupStream stream(g);
      CHECK(stream.total_subgroups() == subs.size());
      CHECK(stream.items().size() == oracle::subgroup_classes(t, subs));
      CHECK(count_subgroups_directly(g) == subs.size());
    }
  }

  TEST_CASE("lattice caps") {
    StreamCaps caps;
    caps.lattice_ambient = 100;
    CHECK_THROWS_AS(SubgroupStream(families::symmetric(5), caps), ResourceLimit);
    CHECK_THROWS_AS(count_subgroups_directly(families::symmetric(6)), ResourceLimit);
    CHECK_THROWS_AS(SubgroupStream(gl_context(2, 13, 1), StreamMode::ExhaustiveLattice, 1), ResourceLimit);
    const auto c = lemma_a_campaign(2, 13, StreamMode::ExhaustiveLattice, 1);
    CHECK(c.report.verdict == Verdict::SkippedResource);
  }

  TEST_CASE("GL_2(7) lattice contains the expected landmarks") {
    SubgroupStream stream(gl_context(2, 7, 1), StreamMode::ExhaustiveLattice, 1);
    std::set<std::size_t> orders;
    for (const auto& it : stream.items()) orders.insert(it.group.order());
    CHECK(orders.count(32) == 1);   // Sylow 2
    CHECK(orders.count(48) == 1);   // Singer cycle
    CHECK(orders.count(252) == 1);  // Borel
    CHECK(orders.count(2016) == 1);
    CHECK(!stream.truncated());
    std::uint64_t total = 0;
    for (const auto& it : stream.items()) {
      REQUIRE(2016 % it.conjugates == 0);
      total += it.conjugates;
    }
    CHECK(total == stream.total_subgroups());
  }

  TEST_CASE("lemma_a_check examples") {
    const auto ctx = gl_context(2, 7, 1);
    const auto gl = families::gl(2, 7);
    const auto v = lemma_a_check(gl, ctx);
    CHECK(v.outcome == LemmaAOutcome::Satisfied);
    CHECK(v.bound == 8);
    CHECK(v.index == 1);  // -I is central
    CHECK(v.index_part == 1);
    bool saw_56 = false;
    for (const auto& [size, part] : v.class_table) {
      if (size == 56) {
        saw_56 = true;
        CHECK(part == oracle::heart_coprime(56, 7));
      }
    }
    CHECK(saw_56);

    const auto syl = sylow2_gl2(7);
    const auto vs = lemma_a_check(syl.group, ctx);
    CHECK(vs.index == 1);
    CHECK(vs.best_involution->as_matrix().is_scalar());

    const auto& f = field_make(7, 1);
    const FiniteGroup odd = FiniteGroup::closure({GroupElement(Matrix::diagonal(f, {2, 4}))});
    CHECK(lemma_a_check(odd, ctx).outcome == LemmaAOutcome::OddOrderSkip);
  }

  TEST_CASE("property: reported involution minimizes the part") {
    const auto ctx = gl_context(2, 7, 1);
    StreamCaps caps;
    caps.count = 40;
    SubgroupStream stream(ctx, StreamMode::RandomGenerated, 5, caps);
    for (const auto& it : stream.items()) {
      if (it.group.order() > 400) continue;
      const auto v = lemma_a_check(it.group, ctx);
      if (v.outcome == LemmaAOutcome::OddOrderSkip) continue;
      REQUIRE(v.index_part == brute_best_part(it.group, 7));
      std::size_t c = 0;
      for (const auto& x : it.group.elements()) c += x * *v.best_involution == *v.best_involution * x;
      REQUIRE(v.index == it.group.order() / c);
    }
  }

  TEST_CASE("property: conjugate subgroups give identical verdicts") {
    const auto ctx = gl_context(2, 7, 1);
    const auto gl = families::gl(2, 7);
    StreamCaps caps;
    caps.count = 25;
    SubgroupStream stream(ctx, StreamMode::RandomGenerated, 9, caps);
    std::size_t k = 0;
    for (const auto& it : stream.items()) {
      const auto& x = gl.elements()[(k++ * 37 + 11) % gl.order()];
      const auto a = lemma_a_check(it.group, ctx);
      const auto b = lemma_a_check(conjugate_group(it.group, x), ctx);
      REQUIRE(a.order == b.order);
      REQUIRE(a.involutions == b.involutions);
      REQUIRE(a.index_part == b.index_part);
      REQUIRE(a.outcome == b.outcome);
    }
  }

  TEST_CASE("random mode is deterministic per seed") {
    const auto ctx = gl_context(2, 13, 1);
    StreamCaps caps;
    caps.count = 30;
    SubgroupStream a(ctx, StreamMode::RandomGenerated, 4, caps), b(ctx, StreamMode::RandomGenerated, 4, caps);
    REQUIRE(a.items().size() == b.items().size());
    for (std::size_t i = 0; i < a.items().size(); ++i) {
      REQUIRE(a.items()[i].group.same_elements(b.items()[i].group));
    }
    std::set<std::vector<GroupElement>> distinct;
    for (const auto& it : a.items()) {
      auto e = it.group.elements();
      std::sort(e.begin(), e.end());
      distinct.insert(e);
    }
    CHECK(distinct.size() == a.items().size());
  }

  TEST_CASE("campaign reports") {
    StreamCaps caps;
    caps.count = 50;
    const auto c = lemma_a_campaign(2, 13, StreamMode::RandomGenerated, 2, caps, 2);
    CHECK(c.report.verdict == Verdict::Verified);
    CHECK(c.report.counts.at("bound") == 14);
    CHECK(c.report.counts.at("subgroups") == 50);
    CHECK(c.report.counts.at("violated") == 0);
    CHECK(c.report.counts.at("even_order") + c.report.counts.at("odd_order_skip") == 50);
    const auto c1 = lemma_a_campaign(2, 13, StreamMode::RandomGenerated, 2, caps, 1);
    CHECK(to_json(c.report, true) == to_json(c1.report, true));
    CHECK(lemma_a_csv_header() == "order,involutions,best_index,part,bound,verdict");
    CHECK(to_csv(c.verdicts.front()).find(",14,") != std::string::npos);
    CHECK(stream_mode_from_string("random") == StreamMode::RandomGenerated);
    CHECK_THROWS_AS(stream_mode_from_string("all"), InvalidArgument);
  }
}
