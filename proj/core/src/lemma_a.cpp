#include "tpv/lemma_a.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "sampling.hpp"
#include "tpv/errors.hpp"
#include "tpv/families.hpp"

namespace tpv {

std::string to_string(StreamMode m) { return m == StreamMode::ExhaustiveLattice ? "exhaustive" : "random"; }

StreamMode stream_mode_from_string(const std::string& s) {
  if (s == "exhaustive") return StreamMode::ExhaustiveLattice;
  if (s == "random") return StreamMode::RandomGenerated;
  throw InvalidArgument("mode must be 'exhaustive' or 'random'");
}

std::string to_string(LemmaAOutcome o) {
  switch (o) {
    case LemmaAOutcome::Satisfied:
      return "satisfied";
    case LemmaAOutcome::Violated:
      return "VIOLATED";
    case LemmaAOutcome::OddOrderSkip:
      return "odd-order-skip";
  }
  return "?";
}

namespace {

struct Indexed {
  IndexSet members;
  std::vector<std::uint32_t> gens;
};

std::vector<Indexed> cyclic_subgroups(const FiniteGroup& g) {
  std::set<IndexSet> seen;
  std::vector<Indexed> out;
  for (std::uint32_t i = 1; i < g.order(); ++i) {
    IndexSet s = closure_in(g, {i});
    if (seen.insert(s).second) out.push_back({std::move(s), {i}});
  }
  return out;
}

std::vector<std::uint32_t> join_gens(const Indexed& a, const Indexed& z) {
  std::vector<std::uint32_t> gens = a.gens;
  gens.insert(gens.end(), z.gens.begin(), z.gens.end());
  return gens;
}

FiniteGroup materialize(const FiniteGroup& ambient, const Indexed& s) {
  std::vector<GroupElement> elems;
  const auto& all = ambient.elements();
  for (auto i = s.members.find_first(); i != IndexSet::npos; i = s.members.find_next(i)) elems.push_back(all[i]);
  std::vector<GroupElement> gens;
  for (auto i : s.gens) gens.push_back(all[i]);
  if (gens.empty()) return FiniteGroup::from_elements(std::move(elems));
  return FiniteGroup::from_elements(std::move(elems), std::move(gens));
}

}  // namespace

SubgroupStream::SubgroupStream(const FiniteGroup& ambient, StreamCaps caps)
    : mode_(StreamMode::ExhaustiveLattice), caps_(caps) {
  run_lattice(ambient);
}

SubgroupStream::SubgroupStream(const GLContext& context, StreamMode mode, std::uint64_t seed, StreamCaps caps)
    : mode_(mode), seed_(seed), caps_(caps) {
  if (mode == StreamMode::ExhaustiveLattice) {
    if (gl_order(static_cast<unsigned>(context.n()), BigInt(context.q())) > caps.lattice_ambient) {
      throw ResourceLimit("ambient group exceeds the exhaustive lattice cap", caps.lattice_ambient);
    }
    run_lattice(families::gl(context.n(), context.q()));
  } else {
    run_random(context);
  }
}

std::uint64_t SubgroupStream::total_subgroups() const {
  std::uint64_t t = 0;
  for (const auto& it : items_) t += it.conjugates;
  return t;
}

void SubgroupStream::run_lattice(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > caps_.lattice_ambient) throw ResourceLimit("ambient group exceeds the exhaustive lattice cap", n);
  g.cache_table(caps_.lattice_ambient + 1);

  // Invariant: subgroup order plus how many elements fall in each ambient class.
  const auto classes = conjugacy_classes(g);
  std::vector<std::uint32_t> class_of(n);
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    for (auto i : classes[c]) class_of[i] = c;
  }
  auto invariant = [&](const IndexSet& s) {
    std::vector<std::uint32_t> key(classes.size() + 1, 0);
    key[0] = static_cast<std::uint32_t>(s.count());
    for (auto i = s.find_first(); i != IndexSet::npos; i = s.find_next(i)) ++key[1 + class_of[i]];
    return key;
  };
  auto conjugate_into = [&](const Indexed& a, const IndexSet& b, std::uint32_t x) {
    for (auto s : a.gens) {
      if (!b.test(g.conj(s, x))) return false;
    }
    return true;
  };
  auto conjugate = [&](const Indexed& a, const IndexSet& b) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (conjugate_into(a, b, x)) return true;
    }
    return false;
  };

  const auto cyclic = cyclic_subgroups(g);
  std::vector<Indexed> reps{{closure_in(g, {}), {}}};
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> buckets;
  buckets[invariant(reps[0].members)].push_back(0);
  std::set<IndexSet> seen{reps[0].members};

  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (const auto& z : cyclic) {
      if (z.members.is_subset_of(reps[r].members)) continue;
      Indexed joined{IndexSet(), join_gens(reps[r], z)};
      joined.members = closure_in(g, joined.gens);
      if (!seen.insert(joined.members).second) continue;
      auto& bucket = buckets[invariant(joined.members)];
      bool known = false;
      for (auto idx : bucket) {
        if (conjugate(joined, reps[idx].members)) {
          known = true;
          break;
        }
      }
      if (known) continue;
      bucket.push_back(reps.size());
      reps.push_back(std::move(joined));
    }
  }

  std::sort(reps.begin(), reps.end(), [](const Indexed& a, const Indexed& b) {
    const auto ca = a.members.count(), cb = b.members.count();
    return ca != cb ? ca < cb : a.members < b.members;
  });
  for (const auto& rep : reps) {
    std::uint64_t normalizer = 0;
    for (std::uint32_t x = 0; x < n; ++x) normalizer += conjugate_into(rep, rep.members, x) ? 1 : 0;
    items_.push_back({materialize(g, rep), n / normalizer, "lattice"});
  }
  if (n <= 500) {
    const std::uint64_t direct = count_subgroups_directly(g, 500);
    if (direct != total_subgroups()) {
      throw InternalError("lattice self-test failed: " + std::to_string(total_subgroups()) + " by classes vs " +
                          std::to_string(direct) + " directly");
    }
  }
}

std::uint64_t count_subgroups_directly(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) throw ResourceLimit("direct subgroup count is limited to small ambients", g.order());
  g.cache_table(cap + 1);
  const auto cyclic = cyclic_subgroups(g);
  std::vector<Indexed> all{{closure_in(g, {}), {}}};
  std::set<IndexSet> seen{all[0].members};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& z : cyclic) {
      if (z.members.is_subset_of(all[i].members)) continue;
      Indexed joined{IndexSet(), join_gens(all[i], z)};
      joined.members = closure_in(g, joined.gens);
      if (seen.insert(joined.members).second) all.push_back(std::move(joined));
    }
  }
  return all.size();
}

namespace {

using detail::Sampler;

Matrix elementary(const FieldSpec& f, std::size_t n, std::size_t r, std::size_t c, std::uint32_t v) {
  Matrix::Storage s(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) s[i * n + i] = 1;
  s[r * n + c] = v;
  return Matrix(f, n, std::move(s));
}

Matrix random_invertible(Sampler& s, const FieldSpec& f, std::size_t n) {
  for (;;) {
    Matrix::Storage st(n * n);
    for (auto& e : st) e = static_cast<std::uint32_t>(s.below(f.order()));
    try {
      return Matrix(f, n, std::move(st));
    } catch (const InvalidArgument&) {
    }
  }
}

std::uint64_t matrix_order(const Matrix& m) {
  std::uint64_t k = 1;
  for (Matrix x = m; !x.is_identity(); x = x * m) ++k;
  return k;
}

Matrix matrix_pow(const Matrix& m, std::uint64_t e) {
  Matrix r = Matrix::identity(m.field(), m.dim());
  Matrix b = m;
  for (; e; e >>= 1, b = b * b) {
    if (e & 1) r = r * b;
  }
  return r;
}

// Companion matrix of the first monic polynomial of degree n whose root has order q^n - 1,
// together with the matrix of x -> x^q in the basis 1, x, ..., x^{n-1}.
struct SingerData {
  Matrix singer;
  Matrix frobenius;
};

SingerData singer_data(const FieldSpec& f, std::size_t n) {
  const std::uint64_t q = f.order();
  std::uint64_t full = 1;
  for (std::size_t i = 0; i < n; ++i) full *= q;
  --full;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= q;
  for (std::uint64_t code = 1; code < count; ++code) {
    Matrix::Storage st(n * n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) st[i * n + i + 1] = 1;
    std::uint64_t rest = code;
    for (std::size_t j = 0; j < n; ++j, rest /= q) st[(n - 1) * n + j] = f.neg(static_cast<std::uint32_t>(rest % q));
    if (st[(n - 1) * n] == 0) continue;
    Matrix c(f, n, std::move(st));
    if (matrix_order(c) != full) continue;
    Matrix::Storage fr(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix p = matrix_pow(c, i * q);
      for (std::size_t j = 0; j < n; ++j) fr[i * n + j] = p.at(0, j);
    }
    return {c, Matrix(f, n, std::move(fr))};
  }
  throw InternalError("no Singer cycle found");
}

std::vector<Matrix> family_generators(Sampler& s, const GLContext& ctx, const SingerData& singer,
                                      const FiniteGroup& sylow, std::string& origin) {
  const FieldSpec& f = ctx.field();
  const std::size_t n = ctx.n();
  const std::uint64_t q = ctx.q();
  const std::uint32_t w = f.primitive_element();
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= q - 1; ++d) {
    if ((q - 1) % d == 0) divisors.push_back(d);
  }
  auto root_of_unity = [&](std::uint64_t d) { return f.pow(w, (q - 1) / d); };
  std::vector<Matrix> gens;
  switch (s.below(9)) {
    case 0:
      origin = "cyclic";
      gens.push_back(random_invertible(s, f, n));
      break;
    case 1:
      origin = "two-generated";
      gens.push_back(random_invertible(s, f, n));
      gens.push_back(random_invertible(s, f, n));
      break;
    case 2: {
      origin = "monomial";
      const std::uint32_t z = root_of_unity(s.pick(divisors));
      std::vector<std::uint32_t> d(n, 1);
      d[0] = z;
      gens.push_back(Matrix::diagonal(f, d));
      if (s.below(2)) {
        std::vector<std::uint32_t> all(n, z);
        gens.push_back(Matrix::diagonal(f, all));
      }
      std::vector<std::uint32_t> cyc(n), swap(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        cyc[i] = (i + 1) % static_cast<std::uint32_t>(n);
        swap[i] = i;
      }
      std::swap(swap[0], swap[1]);
      switch (s.below(4)) {
        case 0:
          break;
        case 1:
          gens.push_back(Matrix::permutation(f, Permutation(swap)));
          break;
        case 2:
          gens.push_back(Matrix::permutation(f, Permutation(cyc)));
          break;
        default:
          gens.push_back(Matrix::permutation(f, Permutation(swap)));
          gens.push_back(Matrix::permutation(f, Permutation(cyc)));
      }
      break;
    }
    case 3: {
      origin = "borel";
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
          if (s.below(3)) gens.push_back(elementary(f, n, r, c, static_cast<std::uint32_t>(1 + s.below(q - 1))));
        }
      }
      std::vector<std::uint32_t> d(n);
      for (auto& x : d) x = root_of_unity(s.pick(divisors));
      gens.push_back(Matrix::diagonal(f, d));
      break;
    }
    case 4: {
      origin = "singer-normalizer";
      std::vector<std::uint64_t> exps;
      std::uint64_t full = matrix_order(singer.singer);
      for (std::uint64_t d = 1; d <= full; ++d) {
        if (full % d == 0) exps.push_back(d);
      }
      gens.push_back(matrix_pow(singer.singer, s.pick(exps)));
      if (s.below(2)) gens.push_back(singer.frobenius);
      break;
    }
    case 5: {
      origin = "sylow-2";
      const std::size_t k = 1 + s.below(3);
      for (std::size_t i = 0; i < k; ++i) gens.push_back(sylow.elements()[s.below(sylow.order())].as_matrix());
      break;
    }
    case 6: {
      origin = "special-linear-block";
      // SL_2(q) on the first two coordinates.
      gens.push_back(elementary(f, n, 0, 1, 1));
      gens.push_back(elementary(f, n, 1, 0, f.neg(1)));
      if (f.degree() > 1) gens.push_back(elementary(f, n, 0, 1, w));
      if (s.below(2)) gens.push_back(Matrix::scalar(f, n, root_of_unity(s.pick(divisors))));
      break;
    }
    case 7: {
      origin = "block-diagonal";
      if (n >= 3) {
        const Matrix top = random_invertible(s, f, 2);
        Matrix::Storage st(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) st[i * n + i] = 1;
        for (std::size_t r = 0; r < 2; ++r) {
          for (std::size_t c = 0; c < 2; ++c) st[r * n + c] = top.at(r, c);
        }
        gens.emplace_back(f, n, std::move(st));
        std::vector<std::uint32_t> d(n, 1);
        d[n - 1] = root_of_unity(s.pick(divisors));
        gens.push_back(Matrix::diagonal(f, d));
      } else {
        std::vector<std::uint32_t> d{root_of_unity(s.pick(divisors)), root_of_unity(s.pick(divisors))};
        gens.push_back(Matrix::diagonal(f, d));
        gens.push_back(random_invertible(s, f, n));
      }
      break;
    }
    default: {
      origin = "scalar-extended";
      gens.push_back(random_invertible(s, f, n));
      gens.push_back(Matrix::scalar(f, n, root_of_unity(s.pick(divisors))));
      break;
    }
  }
  return gens;
}

std::vector<std::size_t> element_key(const FiniteGroup& h) {
  std::vector<std::size_t> key;
  key.reserve(h.order());
  for (const auto& x : h.elements()) key.push_back(x.hash());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

void SubgroupStream::run_random(const GLContext& ctx) {
  const FieldSpec& f = ctx.field();
  const std::size_t n = ctx.n();
  const SingerData singer = singer_data(f, n);
  const FiniteGroup sylow = sylow2_gl(n, ctx.q(), caps_.max_subgroup_order).group;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> seen;

  auto offer = [&](FiniteGroup h, const std::string& origin) {
    auto& slot = seen[element_key(h)];
    for (auto idx : slot) {
      if (items_[idx].group.same_elements(h)) return;
    }
    slot.push_back(items_.size());
    items_.push_back({std::move(h), 0, origin});
  };

  // The full group counts as a member when it fits.
  if (ctx.order() <= caps_.max_subgroup_order) {
    offer(families::gl(n, ctx.q()), "full");
  }
  const std::size_t attempts = caps_.count * caps_.attempts_per_item;
  for (std::size_t t = 0; t < attempts && items_.size() < caps_.count; ++t) {
    Sampler s(seed_, t);
    std::string origin;
    auto mats = family_generators(s, ctx, singer, sylow, origin);
    if (s.below(4) != 0) {
      const Matrix x = random_invertible(s, f, n);
      const Matrix xi = x.inverse();
      for (auto& m : mats) m = xi * m * x;
    }
    std::vector<GroupElement> gens(mats.begin(), mats.end());
    try {
      offer(FiniteGroup::closure(std::move(gens), caps_.max_subgroup_order), origin);
    } catch (const ResourceLimit&) {
      ++rejected_;
    }
  }
  truncated_ = items_.size() < caps_.count;
}

LemmaAVerdict lemma_a_check(const FiniteGroup& h, const GLContext& context) {
  LemmaAVerdict v;
  std::ostringstream os;
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "; " : "") << gens[i].to_string();
  v.subgroup = os.str();
  v.order = h.order();
  v.bound = geom_sum(BigInt(context.q()), static_cast<unsigned>(context.n()));
  if (h.order() % 2 == 1) return v;

  const auto& elems = h.elements();
  IndexSet is_inv(h.order());
  for (std::uint32_t i = 1; i < h.order(); ++i) {
    if ((elems[i] * elems[i]).is_identity()) {
      is_inv.set(i);
      ++v.involutions;
    }
  }
  std::vector<GroupElement> gen_inv;
  for (const auto& s : gens) gen_inv.push_back(s.inverse());
  const BigInt p(context.field().p());
  IndexSet done(h.order());
  bool have = false;
  for (auto start = is_inv.find_first(); start != IndexSet::npos; start = is_inv.find_next(start)) {
    if (done.test(start)) continue;
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(start)};
    done.set(start);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto c = *h.index_of(gen_inv[j] * elems[orbit[k]] * gens[j]);
        if (!done.test(c)) {
          done.set(c);
          orbit.push_back(c);
        }
      }
    }
    ++v.involution_classes;
    const BigInt size(orbit.size());
    const BigInt part = heart_coprime(size, p);
    v.class_table.emplace_back(size, part);
    if (!have || part < v.index_part || (part == v.index_part && size < v.index)) {
      have = true;
      v.index = size;
      v.index_part = part;
      v.best_involution = elems[start];
    }
  }
  v.outcome = v.index_part <= v.bound ? LemmaAOutcome::Satisfied : LemmaAOutcome::Violated;
  return v;
}

std::string lemma_a_csv_header() { return "order,involutions,best_index,part,bound,verdict"; }

std::string to_csv(const LemmaAVerdict& v) {
  std::ostringstream os;
  os << v.order << ',' << v.involutions << ',' << v.index << ',' << v.index_part << ',' << v.bound << ','
     << to_string(v.outcome);
  return os.str();
}

LemmaACampaign lemma_a_campaign(std::size_t n, std::uint64_t q, StreamMode mode, std::uint64_t seed,
                                StreamCaps caps, unsigned jobs) {
  Stopwatch clock;
  LemmaACampaign out;
  VerificationReport& r = out.report;
  r.lemma_id = "lemma-a";
  r.params = {{"n", std::to_string(n)}, {"q", std::to_string(q)}, {"mode", to_string(mode)}};
  if (mode == StreamMode::RandomGenerated) {
    r.seed = seed;
    r.params["count"] = std::to_string(caps.count);
  }
  const GLContext ctx(n, field_of_order(q));
  const auto flags = ctx.flags();
  if (!flags.lemma_hypothesis()) r.notes.push_back("p >= 7 and p = 1 mod 3 fails; results are exploratory");

  std::optional<SubgroupStream> stream;
  try {
    stream.emplace(ctx, mode, seed, caps);
  } catch (const ResourceLimit& e) {
    r.verdict = Verdict::SkippedResource;
    r.notes.push_back(e.what());
    r.elapsed_ms = clock.elapsed_ms();
    return out;
  }
  const auto& items = stream->items();
  out.verdicts.resize(items.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, items.size()))));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < items.size(); i += workers) out.verdicts[i] = lemma_a_check(items[i].group, ctx);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  const BigInt bound = geom_sum(BigInt(q), static_cast<unsigned>(n));
  r.counts = {{"subgroups", items.size()}, {"even_order", 0}, {"odd_order_skip", 0}, {"satisfied", 0},
              {"violated", 0}, {"bound", bound}, {"max_part", 0}, {"min_part", 0}};
  if (mode == StreamMode::ExhaustiveLattice) r.counts["total_subgroups"] = stream->total_subgroups();
  r.counts["rejected_over_cap"] = stream->rejected_over_cap();
  r.counts["truncated"] = stream->truncated() ? 1 : 0;
  for (int b = 0; b <= 10; ++b) r.counts["ratio_decile_" + std::to_string(b)] = 0;
  bool first_even = true;
  r.verdict = Verdict::Verified;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& v = out.verdicts[i];
    if (v.outcome == LemmaAOutcome::OddOrderSkip) {
      r.counts["odd_order_skip"] += 1;
      continue;
    }
    r.counts["even_order"] += 1;
    if (first_even || v.index_part > r.counts["max_part"]) r.counts["max_part"] = v.index_part;
    if (first_even || v.index_part < r.counts["min_part"]) r.counts["min_part"] = v.index_part;
    first_even = false;
    const BigInt decile = std::min<BigInt>(BigInt(10), v.index_part * 10 / bound);
    r.counts["ratio_decile_" + decile.str()] += 1;
    if (v.outcome == LemmaAOutcome::Satisfied) {
      r.counts["satisfied"] += 1;
      continue;
    }
    r.counts["violated"] += 1;
    r.verdict = Verdict::Violated;
    // Recheck the best candidate's index through its centralizer.
    const BigInt recheck(items[i].group.order() / centralizer(items[i].group, *v.best_involution).order());
    std::ostringstream w;
    w << "subgroup <" << v.subgroup << "> order " << v.order << "; involution classes (size, part):";
    for (const auto& [size, part] : v.class_table) w << " (" << size << ", " << part << ")";
    w << "; recheck index " << recheck;
    r.witness = w.str();
    break;
  }
  if (n == 2) r.counts["base_case_ceiling_ok"] = r.counts["max_part"] <= BigInt(q + 1) ? 1 : 0;
  if (stream->truncated()) r.notes.push_back("stream produced fewer subgroups than requested");
  if (items.empty()) r.verdict = Verdict::SkippedResource;
  r.elapsed_ms = clock.elapsed_ms();
  return out;
}

}  // namespace tpv
