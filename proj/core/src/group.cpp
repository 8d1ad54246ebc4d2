#include "tpv/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>

#include "tpv/errors.hpp"

namespace tpv {

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

struct FiniteGroup::Impl {
  std::vector<GroupElement> gens;
  bool gens_known = true;
  std::size_t cap = kDefaultClosureCap;

  std::once_flag elements_once;
  std::atomic<bool> materialized{false};
  std::vector<GroupElement> elements;
  std::vector<std::size_t> hashes;
  std::vector<std::uint32_t> slots;

  std::once_flag gens_once;
  std::once_flag inverse_once;
  std::vector<std::uint32_t> inverses;
  std::once_flag table_once;
  std::atomic<bool> table_ready{false};
  std::vector<std::uint32_t> table;

  std::optional<std::uint32_t> find(const GroupElement& g, std::size_t h) const {
    if (slots.empty()) return std::nullopt;
    const std::size_t mask = slots.size() - 1;
    for (std::size_t s = h & mask;; s = (s + 1) & mask) {
      const std::uint32_t idx = slots[s];
      if (idx == kEmpty) return std::nullopt;
      if (hashes[idx] == h && elements[idx] == g) return idx;
    }
  }

  void rehash(std::size_t capacity) {
    slots.assign(capacity, kEmpty);
    const std::size_t mask = capacity - 1;
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
      std::size_t s = hashes[i] & mask;
      while (slots[s] != kEmpty) s = (s + 1) & mask;
      slots[s] = i;
    }
  }

  // Appends g (known absent) and indexes it.
  void insert(GroupElement g, std::size_t h) {
    elements.push_back(std::move(g));
    hashes.push_back(h);
    if (elements.size() * 2 > slots.size()) {
      rehash(std::max<std::size_t>(16, slots.size() * 2));
      return;
    }
    const std::size_t mask = slots.size() - 1;
    std::size_t s = h & mask;
    while (slots[s] != kEmpty) s = (s + 1) & mask;
    slots[s] = static_cast<std::uint32_t>(elements.size() - 1);
  }

  void materialize() {
    if (gens.empty()) throw InvalidArgument("closure requires at least one generator");
    std::vector<GroupElement> work;
    work.push_back(gens.front().identity());
    elements.clear();
    hashes.clear();
    slots.assign(16, kEmpty);
    insert(work.front(), work.front().hash());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (const auto& s : gens) {
        GroupElement y = elements[i] * s;
        const std::size_t h = y.hash();
        if (!find(y, h)) {
          if (elements.size() >= cap) {
            const std::size_t partial = elements.size();
            elements.clear();
            hashes.clear();
            slots.clear();
            throw ResourceLimit("group closure exceeded cap " + std::to_string(cap), partial);
          }
          insert(std::move(y), h);
        }
      }
    }
  }
};

FiniteGroup::FiniteGroup(std::vector<GroupElement> generators, std::size_t cap) : impl_(std::make_shared<Impl>()) {
  if (generators.empty()) throw InvalidArgument("a group needs at least one generator");
  for (const auto& g : generators) {
    if (!g.same_shape(generators.front())) throw InvalidArgument("generators do not share one shape");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  impl_->gens = std::move(generators);
  impl_->cap = cap;
}

FiniteGroup FiniteGroup::closure(std::vector<GroupElement> generators, std::size_t cap) {
  FiniteGroup g(std::move(generators), cap);
  g.elements();
  return g;
}

FiniteGroup FiniteGroup::from_elements(std::vector<GroupElement> elements,
                                       std::optional<std::vector<GroupElement>> generators) {
  if (elements.empty()) throw InvalidArgument("a group has at least the identity");
  auto id = std::find_if(elements.begin(), elements.end(), [](const GroupElement& e) { return e.is_identity(); });
  if (id == elements.end()) throw InvalidArgument("element list does not contain the identity");
  std::rotate(elements.begin(), id, id + 1);
  auto impl = std::make_shared<Impl>();
  std::size_t capacity = 16;
  while (capacity < elements.size() * 2) capacity *= 2;
  impl->slots.assign(capacity, kEmpty);
  impl->elements.reserve(elements.size());
  for (auto& e : elements) {
    const std::size_t h = e.hash();
    if (!impl->find(e, h)) impl->insert(std::move(e), h);
  }
  impl->cap = std::max(kDefaultClosureCap, impl->elements.size());
  if (generators) {
    impl->gens = std::move(*generators);
    std::sort(impl->gens.begin(), impl->gens.end());
    impl->gens.erase(std::unique(impl->gens.begin(), impl->gens.end()), impl->gens.end());
  } else {
    impl->gens_known = false;
  }
  std::call_once(impl->elements_once, [] {});
  impl->materialized = true;
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::trivial(const GroupElement& shape) {
  return from_elements({shape.identity()}, std::vector<GroupElement>{});
}

const std::vector<GroupElement>& FiniteGroup::elements() const {
  std::call_once(impl_->elements_once, [this] {
    impl_->materialize();
    impl_->materialized = true;
  });
  return impl_->elements;
}

const std::vector<GroupElement>& FiniteGroup::generators() const {
  if (!impl_->gens_known) {
    std::call_once(impl_->gens_once, [this] {
      // Greedy: keep each element that is not yet in the span of the earlier picks.
      const auto& elems = elements();
      std::vector<std::uint32_t> picked;
      IndexSet span(elems.size());
      span.set(0);
      for (std::uint32_t i = 0; i < elems.size(); ++i) {
        if (span.test(i)) continue;
        picked.push_back(i);
        span = closure_in(*this, picked);
        if (span.count() == elems.size()) break;
      }
      std::vector<GroupElement> gens;
      for (auto i : picked) gens.push_back(elems[i]);
      impl_->gens = std::move(gens);
    });
  }
  return impl_->gens;
}

const GroupElement& FiniteGroup::identity() const { return elements().front(); }

std::optional<std::uint32_t> FiniteGroup::index_of(const GroupElement& g) const {
  elements();
  return impl_->find(g, g.hash());
}

std::size_t FiniteGroup::cap() const { return impl_->cap; }
bool FiniteGroup::is_materialized() const { return impl_->materialized; }

std::uint32_t FiniteGroup::mul(std::uint32_t i, std::uint32_t j) const {
  if (impl_->table_ready.load(std::memory_order_acquire)) return impl_->table[static_cast<std::size_t>(i) * order() + j];
  const auto& e = elements();
  auto r = index_of(e[i] * e[j]);
  if (!r) throw InternalError("group is not closed under multiplication");
  return *r;
}

std::uint32_t FiniteGroup::inv(std::uint32_t i) const {
  std::call_once(impl_->inverse_once, [this] {
    const auto& e = elements();
    std::vector<std::uint32_t> inverses(e.size(), kEmpty);
    for (std::uint32_t k = 0; k < e.size(); ++k) {
      if (inverses[k] != kEmpty) continue;
      auto r = index_of(e[k].inverse());
      if (!r) throw InternalError("group is not closed under inversion");
      inverses[k] = *r;
      inverses[*r] = k;
    }
    impl_->inverses = std::move(inverses);
  });
  return impl_->inverses[i];
}

std::uint32_t FiniteGroup::conj(std::uint32_t i, std::uint32_t by) const { return mul(mul(inv(by), i), by); }

void FiniteGroup::cache_table(std::size_t limit) const {
  if (order() > limit) return;
  std::call_once(impl_->table_once, [this] {
    const std::size_t n = order();
    std::vector<std::uint32_t> table(n * n);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = mul(i, j);
    }
    impl_->table = std::move(table);
    impl_->table_ready.store(true, std::memory_order_release);
  });
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& other) const {
  for (const auto& g : generators()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool FiniteGroup::same_elements(const FiniteGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

// Homomorphism

Homomorphism::Homomorphism(FiniteGroup domain, FiniteGroup codomain, Rule rule)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rule_(std::move(rule)) {
  const auto& gens = domain_.generators();
  for (const auto& g : gens) images_.emplace_back(g, rule_(g));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!codomain_.contains(images_[i].second)) throw InvalidArgument("generator image lies outside the codomain");
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (rule_(gens[i] * gens[j]) != images_[i].second * images_[j].second) {
        throw InvalidArgument("rule is not multiplicative on generators");
      }
    }
  }
}

FiniteGroup Homomorphism::kernel() const {
  std::vector<GroupElement> out;
  const GroupElement one = codomain_.identity();
  for (const auto& g : domain_.elements()) {
    if (rule_(g) == one) out.push_back(g);
  }
  return FiniteGroup::from_elements(std::move(out));
}

// Subgroups by index

IndexSet closure_in(const FiniteGroup& ambient, const std::vector<std::uint32_t>& generator_indices) {
  IndexSet members(ambient.order());
  std::vector<std::uint32_t> list{0};
  members.set(0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (auto s : generator_indices) {
      const std::uint32_t y = ambient.mul(list[i], s);
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  }
  return members;
}

FiniteGroup subgroup_from_indices(const FiniteGroup& ambient, const IndexSet& members) {
  std::vector<GroupElement> elems;
  elems.reserve(members.count());
  const auto& all = ambient.elements();
  for (auto i = members.find_first(); i != IndexSet::npos; i = members.find_next(i)) elems.push_back(all[i]);
  return FiniteGroup::from_elements(std::move(elems));
}

IndexSet indices_of(const FiniteGroup& ambient, const FiniteGroup& sub) {
  IndexSet out(ambient.order());
  for (const auto& g : sub.elements()) {
    auto i = ambient.index_of(g);
    if (!i) throw InvalidArgument("not a subgroup of the ambient group");
    out.set(*i);
  }
  return out;
}

// Elements and classes

FiniteGroup centralizing_elements(const FiniteGroup& h, const GroupElement& x) {
  std::vector<GroupElement> out;
  for (const auto& y : h.elements()) {
    if (y * x == x * y) out.push_back(y);
  }
  return FiniteGroup::from_elements(std::move(out));
}

FiniteGroup centralizer(const FiniteGroup& h, const GroupElement& g) {
  if (!h.contains(g)) throw InvalidArgument("centralizer: element is not in the group");
  return centralizing_elements(h, g);
}

std::vector<GroupElement> conj_class(const FiniteGroup& h, const GroupElement& g) {
  auto start = h.index_of(g);
  if (!start) throw InvalidArgument("conj_class: element is not in the group");
  std::vector<std::uint32_t> gens;
  for (const auto& s : h.generators()) gens.push_back(*h.index_of(s));
  IndexSet seen(h.order());
  std::vector<std::uint32_t> orbit{*start};
  seen.set(*start);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto s : gens) {
      const std::uint32_t y = h.conj(orbit[i], s);
      if (!seen.test(y)) {
        seen.set(y);
        orbit.push_back(y);
      }
    }
  }
  std::vector<GroupElement> out;
  for (auto i : orbit) out.push_back(h.elements()[i]);
  return out;
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FiniteGroup& h) {
  std::vector<std::uint32_t> gens;
  for (const auto& s : h.generators()) gens.push_back(*h.index_of(s));
  IndexSet seen(h.order());
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t start = 0; start < h.order(); ++start) {
    if (seen.test(start)) continue;
    std::vector<std::uint32_t> orbit{start};
    seen.set(start);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto s : gens) {
        const std::uint32_t y = h.conj(orbit[i], s);
        if (!seen.test(y)) {
          seen.set(y);
          orbit.push_back(y);
        }
      }
    }
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::vector<GroupElement> involutions(const FiniteGroup& h) {
  std::vector<GroupElement> out;
  for (const auto& x : h.elements()) {
    if (!x.is_identity() && (x * x).is_identity()) out.push_back(x);
  }
  return out;
}

std::uint64_t element_order(const FiniteGroup& h, std::uint32_t i) {
  std::uint64_t k = 1;
  std::uint32_t x = i;
  while (x != 0) {
    x = h.mul(x, i);
    ++k;
  }
  return k;
}

bool is_abelian(const FiniteGroup& h) {
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool is_cyclic(const FiniteGroup& h) {
  if (!is_abelian(h)) return false;
  for (std::uint32_t i = 0; i < h.order(); ++i) {
    if (element_order(h, i) == h.order()) return true;
  }
  return false;
}

// Sylow 2-subgroup by climbing: extend P by a 2-element of N_H(P) \ P
// whose square lies in P, which exists until |P| = |H|_2.
FiniteGroup sylow_two(const FiniteGroup& h) {
  const std::size_t target = static_cast<std::size_t>(part_pow(BigInt(h.order()), 2));
  std::vector<std::uint32_t> gens;
  IndexSet members = closure_in(h, gens);
  std::size_t size = 1;
  while (size < target) {
    bool extended = false;
    for (std::uint32_t x = 1; x < h.order() && !extended; ++x) {
      if (members.test(x) || !members.test(h.mul(x, x))) continue;
      bool normalizes = true;
      for (auto s : gens) {
        if (!members.test(h.conj(s, x))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      gens.push_back(x);
      members = closure_in(h, gens);
      size = members.count();
      extended = true;
    }
    if (!extended) throw InternalError("sylow_two: climbing stalled below the Sylow order");
  }
  std::vector<GroupElement> gen_elems;
  for (auto i : gens) gen_elems.push_back(h.elements()[i]);
  std::vector<GroupElement> elems;
  for (auto i = members.find_first(); i != IndexSet::npos; i = members.find_next(i)) elems.push_back(h.elements()[i]);
  return FiniteGroup::from_elements(std::move(elems), std::move(gen_elems));
}

bool is_normal(const FiniteGroup& h, const FiniteGroup& n) {
  if (!n.is_subgroup_of(h)) return false;
  for (const auto& s : h.generators()) {
    const GroupElement s_inv = s.inverse();
    for (const auto& x : n.generators()) {
      if (!n.contains(s_inv * x * s)) return false;
    }
  }
  return true;
}

namespace {

struct IndexedSubgroup {
  IndexSet members;
  std::vector<std::uint32_t> gens;
};

IndexedSubgroup extend(const FiniteGroup& h, const IndexedSubgroup& base, const std::vector<std::uint32_t>& extra) {
  IndexedSubgroup out = base;
  for (auto x : extra) {
    if (out.members.test(x)) continue;
    out.gens.push_back(x);
    out.members = closure_in(h, out.gens);
  }
  return out;
}

}  // namespace

std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& h, std::size_t cap) {
  if (h.order() > cap) throw ResourceLimit("normal subgroup enumeration cap exceeded", h.order());
  h.cache_table();
  const auto classes = conjugacy_classes(h);
  IndexedSubgroup trivial{closure_in(h, {}), {}};

  std::vector<IndexedSubgroup> closures;
  for (const auto& cls : classes) {
    if (cls.front() == 0) continue;
    closures.push_back(extend(h, trivial, cls));
  }

  std::set<IndexSet> seen;
  std::vector<IndexedSubgroup> found;
  auto add = [&](IndexedSubgroup s) {
    if (seen.insert(s.members).second) found.push_back(std::move(s));
  };
  add(trivial);
  for (auto& c : closures) add(c);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : closures) {
      if (c.members.is_subset_of(found[i].members)) continue;
      add(extend(h, found[i], c.gens));
    }
  }
  std::sort(found.begin(), found.end(), [](const IndexedSubgroup& a, const IndexedSubgroup& b) {
    const auto ca = a.members.count(), cb = b.members.count();
    return ca != cb ? ca < cb : a.members < b.members;
  });
  std::vector<FiniteGroup> out;
  for (const auto& s : found) {
    std::vector<GroupElement> gens;
    for (auto i : s.gens) gens.push_back(h.elements()[i]);
    std::vector<GroupElement> elems;
    for (auto i = s.members.find_first(); i != IndexSet::npos; i = s.members.find_next(i)) elems.push_back(h.elements()[i]);
    out.push_back(FiniteGroup::from_elements(std::move(elems), std::move(gens)));
  }
  return out;
}

FiniteGroup odd_core(const FiniteGroup& h, std::size_t cap) {
  const auto normals = normal_subgroups(h, cap);
  // Sorted by order, so the last odd one is the largest.
  const FiniteGroup* best = &normals.front();
  for (const auto& n : normals) {
    if (n.order() % 2 == 1) best = &n;
  }
  return *best;
}

bool is_nilpotent(const FiniteGroup& h) {
  const PartedInteger order{BigInt(h.order())};
  std::vector<std::uint64_t> orders(h.order());
  for (std::uint32_t i = 0; i < h.order(); ++i) orders[i] = element_order(h, i);
  for (const auto& [r, e] : order.factors()) {
    const auto prime = static_cast<std::uint64_t>(r);
    std::size_t count = 0;
    for (auto o : orders) {
      while (o % prime == 0) o /= prime;
      if (o == 1) ++count;
    }
    if (BigInt(count) != boost::multiprecision::pow(r, e)) return false;
  }
  return true;
}

FiniteGroup join(const FiniteGroup& ambient, const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::uint32_t> gens;
  for (const auto& g : a.generators()) gens.push_back(*ambient.index_of(g));
  for (const auto& g : b.generators()) gens.push_back(*ambient.index_of(g));
  return subgroup_from_indices(ambient, closure_in(ambient, gens));
}

FiniteGroup fitting(const FiniteGroup& h, std::size_t cap) {
  const auto normals = normal_subgroups(h, cap);
  FiniteGroup f = normals.front();
  for (const auto& n : normals) {
    if (n.order() > 1 && is_nilpotent(n)) f = join(h, f, n);
  }
  return f;
}

std::pair<FiniteGroup, Homomorphism> quotient(const FiniteGroup& h, const FiniteGroup& n) {
  if (!is_normal(h, n)) throw InvalidArgument("quotient: subgroup is not normal");
  struct CosetTable {
    std::vector<std::uint32_t> coset_of;
    std::vector<std::uint32_t> reps;
  };
  auto table = std::make_shared<CosetTable>();
  table->coset_of.assign(h.order(), kEmpty);
  std::vector<std::uint32_t> n_idx;
  for (const auto& x : n.elements()) n_idx.push_back(*h.index_of(x));
  for (std::uint32_t i = 0; i < h.order(); ++i) {
    if (table->coset_of[i] != kEmpty) continue;
    const auto c = static_cast<std::uint32_t>(table->reps.size());
    table->reps.push_back(i);
    for (auto k : n_idx) table->coset_of[h.mul(k, i)] = c;
  }
  auto action = [h, table](const GroupElement& g) -> GroupElement {
    auto gi = h.index_of(g);
    if (!gi) throw InvalidArgument("quotient map applied outside its domain");
    std::vector<std::uint32_t> img(table->reps.size());
    for (std::size_t c = 0; c < img.size(); ++c) img[c] = table->coset_of[h.mul(table->reps[c], *gi)];
    return Permutation(std::move(img));
  };
  std::vector<GroupElement> gens;
  for (const auto& s : h.generators()) gens.push_back(action(s));
  FiniteGroup image = gens.empty() ? FiniteGroup::trivial(Permutation::identity(table->reps.size()))
                                   : FiniteGroup::closure(std::move(gens), h.cap());
  if (image.order() != table->reps.size()) throw InternalError("quotient order mismatch");
  Homomorphism proj(h, image, action);
  return {image, proj};
}

unsigned two_rank(const FiniteGroup& h) {
  const FiniteGroup p = sylow_two(h);
  std::vector<std::uint32_t> invs;
  for (std::uint32_t i = 1; i < p.order(); ++i) {
    if (p.mul(i, i) == 0) invs.push_back(i);
  }
  if (invs.empty()) return 0;
  unsigned best = 1;
  // Depth-first over elementary abelian subgroups with generators chosen in
  // increasing index order (every such subgroup has a basis of that form).
  std::function<void(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&, std::uint32_t, unsigned)>
      grow = [&](const std::vector<std::uint32_t>& members, const std::vector<std::uint32_t>& candidates,
                 std::uint32_t last, unsigned rank) {
        best = std::max(best, rank);
        for (auto x : candidates) {
          if (x <= last) continue;
          if (std::find(members.begin(), members.end(), x) != members.end()) continue;
          std::vector<std::uint32_t> bigger = members;
          for (auto m : members) bigger.push_back(p.mul(m, x));
          std::sort(bigger.begin(), bigger.end());
          std::vector<std::uint32_t> next;
          for (auto y : candidates) {
            if (y > x && p.mul(x, y) == p.mul(y, x) && !std::binary_search(bigger.begin(), bigger.end(), y)) {
              next.push_back(y);
            }
          }
          // Rank can grow by at most log2(|next| + 1).
          unsigned bound = rank + 1;
          for (std::size_t c = next.size() + 1; c > 1; c >>= 1) ++bound;
          if (bound <= best) continue;
          grow(bigger, next, x, rank + 1);
        }
      };
  for (auto x : invs) {
    std::vector<std::uint32_t> members{0, x};
    std::vector<std::uint32_t> next;
    for (auto y : invs) {
      if (y > x && p.mul(x, y) == p.mul(y, x)) next.push_back(y);
    }
    grow(members, next, x, 1);
  }
  return best;
}

bool is_generalized_quaternion(const FiniteGroup& p) {
  if (!is_power_of_two(p.order())) throw InvalidArgument("is_generalized_quaternion: not a 2-group");
  if (p.order() < 8) return false;
  std::size_t count = 0;
  for (std::uint32_t i = 1; i < p.order(); ++i) {
    if (p.mul(i, i) == 0) ++count;
  }
  return count == 1 && !is_cyclic(p);
}

std::string to_string(QuaternionStructure tag) {
  switch (tag) {
    case QuaternionStructure::TwoGroup:
      return "TwoGroup";
    case QuaternionStructure::ZA7:
      return "ZA7";
    case QuaternionStructure::SL2qD:
      return "SL2qD";
    case QuaternionStructure::Unknown:
      return "Unknown";
  }
  return "?";
}

QuaternionClassification classify_quaternion_structure(const FiniteGroup& g) {
  const FiniteGroup p = sylow_two(g);
  if (p.order() > 1 && !is_cyclic(p) && !is_generalized_quaternion(p)) {
    throw InvalidArgument("classify_quaternion_structure: Sylow 2-subgroup is neither cyclic nor generalized quaternion");
  }
  QuaternionClassification out{QuaternionStructure::Unknown};
  const FiniteGroup core = odd_core(g);
  out.odd_core_order = core.order();
  const auto [reduced, proj] = quotient(g, core);
  out.reduced_order = reduced.order();
  if (is_power_of_two(reduced.order())) {
    out.tag = QuaternionStructure::TwoGroup;
    return out;
  }
  const auto normals = normal_subgroups(reduced);
  if (reduced.order() == 5040) {
    const auto invs = involutions(reduced);
    if (invs.size() == 1) {
      const auto& z = invs.front();
      bool central = true;
      for (const auto& s : reduced.generators()) central = central && (s * z == z * s);
      if (central) {
        const FiniteGroup zgroup = FiniteGroup::closure({z});
        const auto [simple_candidate, unused] = quotient(reduced, zgroup);
        if (simple_candidate.order() == 2520 && normal_subgroups(simple_candidate).size() == 2) {
          out.tag = QuaternionStructure::ZA7;
          return out;
        }
      }
    }
  }
  for (const auto& s : normals) {
    // |SL_2(q)| = q(q^2 - 1) for an odd prime power q.
    std::uint64_t q = 3;
    while (q * (q * q - 1) < s.order()) q += 2;
    if (q * (q * q - 1) != s.order() || !is_prime_power(q)) continue;
    if (involutions(s).size() != 1) continue;
    const std::size_t d = reduced.order() / s.order();
    if (d % 2 == 0) continue;
    const auto [top, unused] = quotient(reduced, s);
    if (!is_cyclic(top)) continue;
    out.tag = QuaternionStructure::SL2qD;
    out.q = q;
    out.d = d;
    return out;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> orbits(const FiniteGroup& g) {
  const std::size_t degree = g.identity().as_permutation().degree();
  std::vector<std::uint32_t> parent(degree);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : g.generators()) {
    const auto& perm = s.as_permutation();
    for (std::uint32_t i = 0; i < degree; ++i) {
      const auto a = find(i), b = find(perm[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::int64_t> slot(degree, -1);
  for (std::uint32_t i = 0; i < degree; ++i) {
    const auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return out;
}

bool is_transitive(const FiniteGroup& g) { return orbits(g).size() == 1; }

FiniteGroup stabilizer(const FiniteGroup& g, std::uint32_t point) {
  std::vector<GroupElement> out;
  for (const auto& x : g.elements()) {
    if (x.as_permutation()[point] == point) out.push_back(x);
  }
  return FiniteGroup::from_elements(std::move(out));
}

}  // namespace tpv
