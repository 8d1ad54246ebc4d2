#include "tpv/sn_bounds.hpp"

#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tpv/errors.hpp"
#include "tpv/families.hpp"

namespace tpv {

std::string to_string(SnBoundKind k) { return k == SnBoundKind::OddSn ? "oddsn" : "sninvolutions"; }

namespace {

std::size_t degree_of(const FiniteGroup& g) {
  const auto& gens = g.generators();
  const GroupElement& any = gens.empty() ? g.identity() : gens.front();
  if (any.kind() != ElementKind::Permutation) throw InvalidArgument("expected a permutation group");
  return any.as_permutation().degree();
}

// Smallest block containing 0 and b, as a union-find over the points.
bool block_is_everything(const std::vector<Permutation>& gens, std::size_t n, std::uint32_t b) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending{{0, b}};
  parent[b] = 0;
  std::size_t classes = n - 1;
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& g : gens) {
      const auto a = find(g[x]), c = find(g[y]);
      if (a == c) continue;
      parent[c] = a;
      --classes;
      pending.emplace_back(a, c);
    }
  }
  return classes == 1;
}

using Float50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>>;
using Float100 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;
using Float250 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<250>>;

// Sign of (log2 n)^2 - log2 m when |difference| clears 10^-(digits-10).
template <class F>
int log_gap_sign(std::size_t n, const BigInt& m, int digits) {
  const F ln2 = log(F(2));
  const F l = log(F(n)) / ln2;
  const F gap = l * l - log(F(m)) / ln2;
  if (abs(gap) < pow(F(10), -(digits - 10))) return 0;
  return gap > 0 ? 1 : -1;
}

}  // namespace

bool is_primitive(const FiniteGroup& g) {
  const std::size_t n = degree_of(g);
  if (n < 2 || !is_transitive(g)) return false;
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.as_permutation());
  for (std::uint32_t b = 1; b < n; ++b) {
    if (!block_is_everything(gens, n, b)) return false;
  }
  return true;
}

VerificationReport sn_bound_check(SnBoundKind kind, const FiniteGroup& h) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma_id = to_string(kind);
  const std::size_t n = degree_of(h);
  const BigInt order(h.order());
  r.params = {{"n", std::to_string(n)}, {"order", order.str()}};
  r.counts = {{"degree", n}, {"order", order}};
  r.verdict = Verdict::NotApplicable;
  auto done = [&]() {
    r.elapsed_ms = clock.elapsed_ms();
    return r;
  };
  if (!is_primitive(h)) {
    r.notes.push_back("group is not primitive");
    return done();
  }
  const bool odd = order % 2 == 1;
  if (kind == SnBoundKind::OddSn) {
    if (!odd) {
      r.notes.push_back("order is even");
      return done();
    }
    // |H| < n^(log2 n) = 2^((log2 n)^2).
    bool holds;
    if ((n & (n - 1)) == 0) {
      unsigned k = 0;
      while ((std::size_t{1} << k) < n) ++k;
      holds = order < (BigInt(1) << (k * k));
      r.counts["precision_digits"] = 0;
    } else {
      int sign = log_gap_sign<Float50>(n, order, 50);
      int digits = 50;
      if (sign == 0) sign = log_gap_sign<Float100>(n, order, digits = 100);
      if (sign == 0) sign = log_gap_sign<Float250>(n, order, digits = 250);
      if (sign == 0) {
        r.verdict = Verdict::SkippedResource;
        r.notes.push_back("comparison undecided at 250 digits");
        return done();
      }
      holds = sign > 0;
      r.counts["precision_digits"] = digits;
    }
    r.verdict = holds ? Verdict::Verified : Verdict::Violated;
    if (!holds) r.witness = "order " + order.str() + " on " + std::to_string(n) + " points";
    return done();
  }

  if (odd) {
    r.notes.push_back("order is odd");
    return done();
  }
  if (n < 3) {
    r.notes.push_back("degree below 3");
    return done();
  }
  // |H:C_H(g)| < 42^((n-2)/2)  <=>  |H:C_H(g)|^2 < 42^(n-2).
  const BigInt bound_squared = boost::multiprecision::pow(BigInt(42), static_cast<unsigned>(n - 2));
  const auto& elems = h.elements();
  std::optional<BigInt> best;
  std::optional<std::size_t> best_at;
  for (const auto& cls : conjugacy_classes(h)) {
    const auto& g = elems[cls.front()];
    if (g.is_identity() || !(g * g).is_identity()) continue;
    const BigInt size(cls.size());
    if (!best || size < *best) {
      best = size;
      best_at = cls.front();
    }
  }
  r.counts["best_class_size"] = *best;
  r.counts["bound_squared"] = bound_squared;
  const bool holds = *best * *best < bound_squared;
  r.verdict = holds ? Verdict::Verified : Verdict::Violated;
  if (!holds) r.witness = elems[*best_at].to_string() + " with class size " + best->str();
  return done();
}

std::vector<NamedGroup> primitive_instances(std::size_t degree) {
  std::vector<NamedGroup> out;
  if (degree >= 3 && is_prime(static_cast<std::uint64_t>(degree))) {
    const auto p = static_cast<std::uint32_t>(degree);
    for (std::uint32_t d = 1; d <= p - 1; ++d) {
      if ((p - 1) % d == 0) out.push_back({"C" + std::to_string(p) + ":C" + std::to_string(d), families::affine(p, d)});
    }
  }
  if (degree >= 3 && degree <= 7) {
    out.push_back({"A" + std::to_string(degree), families::alternating(degree)});
    out.push_back({"S" + std::to_string(degree), families::symmetric(degree)});
  }
  const std::uint64_t p = degree - 1;
  if (p >= 5 && p <= 13 && is_prime(p)) {
    out.push_back({"PSL2(" + std::to_string(p) + ")", families::psl2_natural(static_cast<std::uint32_t>(p))});
  }
  return out;
}

}  // namespace tpv
