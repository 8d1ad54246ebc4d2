#include "tpv/tower.hpp"

#include <sstream>
#include <thread>

#include "sampling.hpp"
#include "tpv/errors.hpp"
#include "tpv/families.hpp"

namespace tpv {

GroupElement tower_component(const GroupElement& g, std::size_t i) {
  const auto& parts = g.parts();
  if (i >= parts.size()) throw InvalidArgument("tower component index out of range");
  return GroupElement::tuple(std::vector<GroupElement>(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end()));
}

TowerDecomposition build_tower(const FiniteGroup& h, std::size_t r, std::vector<FiniteGroup> factors) {
  if (r < 1) throw InvalidArgument("build_tower: need at least one factor");
  const GroupElement& one = h.identity();
  if (one.kind() != ElementKind::Tuple || one.parts().size() != r) {
    throw InvalidArgument("build_tower: H must consist of " + std::to_string(r) + "-component tuples");
  }
  if (factors.empty()) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<GroupElement> gens;
      for (const auto& s : h.generators()) gens.push_back(s.parts()[j]);
      factors.push_back(FiniteGroup::closure(std::move(gens), h.cap()));
    }
  }
  if (factors.size() != r) throw InvalidArgument("build_tower: factor count mismatch");
  for (const auto& s : h.generators()) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!factors[j].contains(s.parts()[j])) throw InvalidArgument("build_tower: H is not inside the product");
    }
  }

  std::vector<FiniteGroup> levels{h};
  for (std::size_t i = 1; i < r; ++i) {
    std::vector<GroupElement> gens;
    for (const auto& s : h.generators()) gens.push_back(tower_component(s, i));
    levels.push_back(FiniteGroup::closure(std::move(gens), h.cap()));
  }
  std::vector<Homomorphism> projections;
  std::vector<FiniteGroup> kernels;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    projections.emplace_back(levels[i], levels[i + 1], [](const GroupElement& g) { return tower_component(g, 1); });
    kernels.push_back(projections.back().kernel());
    if (levels[i].order() != kernels[i].order() * levels[i + 1].order()) {
      throw InternalError("build_tower: |L_i| != |T_i| |L_{i+1}|");
    }
  }
  kernels.push_back(levels.back());

  std::optional<std::size_t> first_even;
  for (std::size_t i = 0; i < r; ++i) {
    if (kernels[i].order() % 2 == 0) {
      first_even = i;
      break;
    }
  }
  return TowerDecomposition{std::move(factors), h, std::move(levels), std::move(projections), std::move(kernels),
                            first_even};
}

namespace {

bool is_involution(const GroupElement& g) { return !g.is_identity() && (g * g).is_identity(); }

BigInt index_of_centralizer(const FiniteGroup& h, const GroupElement& g) {
  return BigInt(h.order() / centralizing_elements(h, g).order());
}

std::size_t count_in(const std::vector<GroupElement>& elems, const FiniteGroup& p) {
  std::size_t c = 0;
  for (const auto& x : elems) c += p.contains(x) ? 1 : 0;
  return c;
}

std::string describe(const FiniteGroup& g) {
  std::ostringstream os;
  os << "<";
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].to_string();
  os << "> order " << g.order();
  return os.str();
}

VerificationReport not_applicable(VerificationReport r, const std::string& why, const Stopwatch& clock) {
  r.verdict = Verdict::NotApplicable;
  r.notes.push_back(why);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

void compare(VerificationReport& r, const BigInt& lhs, const BigInt& rhs, const std::string& witness) {
  r.counts["lhs"] = lhs;
  r.counts["rhs"] = rhs;
  r.verdict = lhs == rhs ? Verdict::Verified : Verdict::Violated;
  if (lhs != rhs) r.witness = witness;
}

}  // namespace

VerificationReport verify_oddnormal(const FiniteGroup& h, const FiniteGroup& n, const GroupElement& g) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma_id = "oddnormal";
  r.params = {{"H_order", std::to_string(h.order())}, {"N_order", std::to_string(n.order())}};
  if (!h.contains(g) || !is_involution(g)) return not_applicable(r, "g is not an involution of H", clock);
  if (n.order() % 2 == 0) return not_applicable(r, "|N| is even", clock);
  if (!is_normal(h, n)) return not_applicable(r, "N is not normal in H", clock);

  const BigInt lhs = index_of_centralizer(h, g);
  const BigInt in_n = index_of_centralizer(n, g);
  const auto [q, proj] = quotient(h, n);
  const BigInt in_q = index_of_centralizer(q, proj(g));
  r.counts["index_N"] = in_n;
  r.counts["index_quotient"] = in_q;
  compare(r, lhs, in_n * in_q, "H=" + describe(h) + " N=" + describe(n) + " g=" + g.to_string());
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_sylow_fusion(const FiniteGroup& h, const FiniteGroup& n, const GroupElement& g) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma_id = "sylowtwos";
  r.params = {{"H_order", std::to_string(h.order())}, {"N_order", std::to_string(n.order())}};
  if (!n.contains(g) || !is_involution(g)) return not_applicable(r, "g is not an involution of N", clock);
  if (!is_normal(h, n)) return not_applicable(r, "N is not normal in H", clock);

  const FiniteGroup p = sylow_two(n);
  const BigInt lhs = index_of_centralizer(h, g);
  const BigInt in_n = index_of_centralizer(n, g);
  const BigInt fused(count_in(conj_class(h, g), p));
  const BigInt local(count_in(conj_class(n, g), p));
  r.counts["index_N"] = in_n;
  r.counts["fusion_H"] = fused;
  r.counts["fusion_N"] = local;
  const std::string witness = "H=" + describe(h) + " N=" + describe(n) + " g=" + g.to_string();
  if (local == 0 || (in_n * fused) % local != 0) {
    r.verdict = Verdict::Violated;
    r.witness = witness + " (non-integral fusion ratio)";
  } else {
    compare(r, lhs, in_n * fused / local, witness);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_tower_identity(const TowerDecomposition& tower, const GroupElement& g) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma_id = "invcentralizer";
  r.params = {{"H_order", std::to_string(tower.h.order())}, {"factors", std::to_string(tower.factors.size())}};
  if (!tower.h.contains(g) || !is_involution(g)) return not_applicable(r, "g is not an involution of H", clock);
  if (!tower.first_even) return not_applicable(r, "every kernel has odd order", clock);
  const std::size_t k = *tower.first_even;
  r.counts["k"] = k + 1;
  const GroupElement gk = tower_component(g, k);
  if (gk.is_identity()) return not_applicable(r, "g has trivial image in L_k", clock);
  if (!tower.kernels[k].contains(gk)) return not_applicable(r, "image of g in L_k lies outside T_k", clock);

  BigInt product = 1;
  for (std::size_t i = 0; i <= k; ++i) product *= index_of_centralizer(tower.kernels[i], tower_component(g, i));
  const FiniteGroup p = sylow_two(tower.kernels[k]);
  const BigInt fused(count_in(conj_class(tower.levels[k], gk), p));
  const BigInt local(count_in(conj_class(tower.kernels[k], gk), p));
  r.counts["kernel_product"] = product;
  r.counts["fusion_L"] = fused;
  r.counts["fusion_T"] = local;
  const BigInt lhs = index_of_centralizer(tower.h, g);
  const std::string witness = "H=" + describe(tower.h) + " g=" + g.to_string();
  if (local == 0 || (product * fused) % local != 0) {
    r.verdict = Verdict::Violated;
    r.witness = witness + " (non-integral fusion ratio)";
  } else {
    compare(r, lhs, product * fused / local, witness);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace {

using detail::Sampler;

FiniteGroup small_block(Sampler& s, bool tiny) {
  switch (s.below(tiny ? 9 : 15)) {
    case 0:
      return families::cyclic(2);
    case 1:
      return families::cyclic(3);
    case 2:
      return families::cyclic(4);
    case 3:
      return families::dihedral(3);
    case 4:
      return families::dihedral(4);
    case 5:
      return families::quaternion(8);
    case 6:
      return families::cyclic(5);
    case 7:
      return families::cyclic(6);
    case 8:
      return families::alternating(4);
    case 9:
      return families::dihedral(5);
    case 10:
      return families::dihedral(6);
    case 11:
      return families::symmetric(4);
    case 12:
      return families::affine(5, 4);
    case 13:
      return families::affine(7, 3);
    default:
      return families::sl(2, 3);
  }
}

FiniteGroup ambient_group(Sampler& s) {
  if (s.below(3) == 0) return small_block(s, false);
  return families::direct_product({small_block(s, true), small_block(s, true)});
}

GroupElement random_element(Sampler& s, const FiniteGroup& g) { return g.elements()[s.below(g.order())]; }

struct TrialResult {
  int kind;  // 0 oddnormal, 1 fusion, 2 tower
  VerificationReport report;
};

TrialResult run_trial(std::uint64_t seed, std::size_t trial) {
  Sampler s(seed, trial);
  const int kind = static_cast<int>(trial % 3);
  for (int attempt = 0; attempt < 16; ++attempt) {
    if (kind == 0 || kind == 1) {
      const FiniteGroup h = ambient_group(s);
      std::vector<FiniteGroup> candidates;
      for (auto& n : normal_subgroups(h)) {
        if ((kind == 0) == (n.order() % 2 == 1)) candidates.push_back(n);
      }
      if (candidates.empty()) continue;
      const FiniteGroup n = s.pick(candidates);
      const auto invs = involutions(kind == 0 ? h : n);
      if (invs.empty()) continue;
      const GroupElement g = s.pick(invs);
      return {kind, kind == 0 ? verify_oddnormal(h, n, g) : verify_sylow_fusion(h, n, g)};
    }
    const std::size_t r = 2 + s.below(2);
    std::vector<FiniteGroup> factors;
    for (std::size_t i = 0; i < r; ++i) factors.push_back(small_block(s, true));
    const FiniteGroup full = families::direct_product(factors);
    FiniteGroup h = full;
    switch (s.below(3)) {
      case 0:
        break;
      case 1: {
        std::vector<GroupElement> gens;
        const std::size_t count = 1 + s.below(3);
        for (std::size_t i = 0; i < count; ++i) gens.push_back(random_element(s, full));
        h = FiniteGroup::closure(std::move(gens));
        break;
      }
      default: {
        // Diagonal in the first two coordinates when they agree, else a twisted pair.
        factors[1] = factors[0];
        std::vector<GroupElement> gens;
        for (const auto& x : factors[0].generators()) {
          std::vector<GroupElement> parts{x, x};
          for (std::size_t i = 2; i < r; ++i) parts.push_back(factors[i].identity());
          gens.push_back(GroupElement::tuple(std::move(parts)));
        }
        for (std::size_t i = 2; i < r; ++i) {
          for (const auto& y : factors[i].generators()) {
            std::vector<GroupElement> parts{factors[0].identity(), factors[0].identity()};
            for (std::size_t j = 2; j < r; ++j) parts.push_back(j == i ? y : factors[j].identity());
            gens.push_back(GroupElement::tuple(std::move(parts)));
          }
        }
        h = FiniteGroup::closure(std::move(gens));
        break;
      }
    }
    const auto invs = involutions(h);
    if (invs.empty()) continue;
    const TowerDecomposition tower = build_tower(h, r, factors);
    // Prefer involutions whose image in L_k is a nontrivial element of T_k.
    std::vector<GroupElement> applicable;
    if (tower.first_even) {
      for (const auto& x : invs) {
        const GroupElement xk = tower_component(x, *tower.first_even);
        if (!xk.is_identity() && tower.kernels[*tower.first_even].contains(xk)) applicable.push_back(x);
      }
    }
    const GroupElement g = s.pick(applicable.empty() ? invs : applicable);
    return {kind, verify_tower_identity(tower, g)};
  }
  VerificationReport none;
  none.lemma_id = kind == 0 ? "oddnormal" : kind == 1 ? "sylowtwos" : "invcentralizer";
  none.verdict = Verdict::NotApplicable;
  none.notes.push_back("no instance with an involution after 16 draws");
  return {kind, none};
}

}  // namespace

VerificationReport random_identity_campaign(std::uint64_t seed, std::size_t trials, unsigned jobs) {
  if (trials < 1) throw InvalidArgument("random_identity_campaign needs trials >= 1");
  Stopwatch clock;
  std::vector<std::optional<TrialResult>> results(trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(trials)));
  auto work = [&](unsigned w) {
    for (std::size_t t = w; t < trials; t += workers) results[t] = run_trial(seed, t);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  VerificationReport r;
  r.lemma_id = "identity-campaign";
  r.seed = seed;
  r.params = {{"trials", std::to_string(trials)}};
  static const char* names[] = {"oddnormal", "sylowtwos", "invcentralizer"};
  for (const char* name : names) {
    for (const char* what : {"pass", "fail", "not_applicable"}) r.counts[std::string(name) + "_" + what] = 0;
  }
  Verdict overall = Verdict::NotApplicable;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& res = *results[t];
    const std::string name = names[res.kind];
    switch (res.report.verdict) {
      case Verdict::Verified:
        r.counts[name + "_pass"] += 1;
        break;
      case Verdict::Violated:
        r.counts[name + "_fail"] += 1;
        if (!r.witness) r.witness = "trial " + std::to_string(t) + ": " + *res.report.witness;
        break;
      default:
        r.counts[name + "_not_applicable"] += 1;
        break;
    }
    overall = combine(overall, res.report.verdict);
  }
  r.verdict = overall;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace tpv
