#ifndef TPV_GROUP_HPP
#define TPV_GROUP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tpv/element.hpp"
#include "tpv/part_arith.hpp"

namespace tpv {

constexpr std::size_t kDefaultClosureCap = 5'000'000;
constexpr std::size_t kNormalEnumerationCap = 10'000;

// A finite group given by generators. The element set is materialized on
// first use (exactly once, thread-safe) by breadth-first closure from the
// sorted generator list, so element order is deterministic. Copies share
// the same immutable state.
class FiniteGroup {
 public:
  // Lazy: nothing is computed until elements() or order() is called.
  explicit FiniteGroup(std::vector<GroupElement> generators, std::size_t cap = kDefaultClosureCap);
  // Eager closure; throws ResourceLimit (with partial count) past cap.
  static FiniteGroup closure(std::vector<GroupElement> generators, std::size_t cap = kDefaultClosureCap);
  // Trusted element list of a group (identity included, closed). Generators
  // are derived greedily on demand unless given.
  static FiniteGroup from_elements(std::vector<GroupElement> elements,
                                   std::optional<std::vector<GroupElement>> generators = std::nullopt);
  static FiniteGroup trivial(const GroupElement& shape);

  const std::vector<GroupElement>& generators() const;
  const std::vector<GroupElement>& elements() const;
  std::size_t order() const { return elements().size(); }
  const GroupElement& identity() const;
  std::optional<std::uint32_t> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
  std::size_t cap() const;
  bool is_materialized() const;

  // Index arithmetic on the materialized element list.
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inv(std::uint32_t i) const;
  std::uint32_t conj(std::uint32_t i, std::uint32_t by) const;  // by^-1 i by
  // Precomputes a full multiplication table when order() <= limit.
  void cache_table(std::size_t limit = 2600) const;

  bool is_subgroup_of(const FiniteGroup& other) const;
  bool same_elements(const FiniteGroup& other) const;

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

// Generator -> image table, extended multiplicatively by evaluating the rule.
class Homomorphism {
 public:
  using Rule = std::function<GroupElement(const GroupElement&)>;
  // Verifies phi(gh) = phi(g)phi(h) on all generator pairs; throws InvalidArgument otherwise.
  Homomorphism(FiniteGroup domain, FiniteGroup codomain, Rule rule);

  GroupElement operator()(const GroupElement& g) const { return rule_(g); }
  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<std::pair<GroupElement, GroupElement>>& generator_images() const { return images_; }
  FiniteGroup kernel() const;

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  Rule rule_;
  std::vector<std::pair<GroupElement, GroupElement>> images_;
};

using IndexSet = boost::dynamic_bitset<>;

// Subgroup of a materialized ambient group from a set of element indices.
FiniteGroup subgroup_from_indices(const FiniteGroup& ambient, const IndexSet& members);
IndexSet indices_of(const FiniteGroup& ambient, const FiniteGroup& sub);
// Closure of the given ambient indices inside the ambient group.
IndexSet closure_in(const FiniteGroup& ambient, const std::vector<std::uint32_t>& generator_indices);

FiniteGroup centralizer(const FiniteGroup& h, const GroupElement& g);
// {h in H : hx = xh} for x not necessarily in H.
FiniteGroup centralizing_elements(const FiniteGroup& h, const GroupElement& x);
std::vector<GroupElement> conj_class(const FiniteGroup& h, const GroupElement& g);
// Conjugacy classes as lists of element indices, ordered by first index.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FiniteGroup& h);
std::vector<GroupElement> involutions(const FiniteGroup& h);
std::uint64_t element_order(const FiniteGroup& h, std::uint32_t i);

FiniteGroup sylow_two(const FiniteGroup& h);
bool is_normal(const FiniteGroup& h, const FiniteGroup& n);
std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& h, std::size_t cap = kNormalEnumerationCap);
FiniteGroup odd_core(const FiniteGroup& h, std::size_t cap = kNormalEnumerationCap);
bool is_nilpotent(const FiniteGroup& h);
FiniteGroup fitting(const FiniteGroup& h, std::size_t cap = kNormalEnumerationCap);
FiniteGroup join(const FiniteGroup& ambient, const FiniteGroup& a, const FiniteGroup& b);
bool is_abelian(const FiniteGroup& h);
bool is_cyclic(const FiniteGroup& h);
// Action of H on the right cosets Nx; returns H/N as a permutation group and the projection.
std::pair<FiniteGroup, Homomorphism> quotient(const FiniteGroup& h, const FiniteGroup& n);

unsigned two_rank(const FiniteGroup& h);
bool is_generalized_quaternion(const FiniteGroup& p);

enum class QuaternionStructure { TwoGroup, ZA7, SL2qD, Unknown };
struct QuaternionClassification {
  QuaternionStructure tag;
  std::uint64_t q = 0;  // SL2qD only
  std::uint64_t d = 0;  // SL2qD only: |D|
  std::size_t odd_core_order = 1;
  std::size_t reduced_order = 0;  // |G/O(G)|
};
QuaternionClassification classify_quaternion_structure(const FiniteGroup& g);
std::string to_string(QuaternionStructure tag);

// Orbits of a permutation group on its points, in order of least point.
std::vector<std::vector<std::uint32_t>> orbits(const FiniteGroup& g);
bool is_transitive(const FiniteGroup& g);
// Point stabilizer of a permutation group.
FiniteGroup stabilizer(const FiniteGroup& g, std::uint32_t point);

}  // namespace tpv

#endif  // TPV_GROUP_HPP
