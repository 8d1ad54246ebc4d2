#ifndef TPV_LEMMA_A_HPP
#define TPV_LEMMA_A_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpv/group.hpp"
#include "tpv/matgroup.hpp"
#include "tpv/report.hpp"

namespace tpv {

enum class StreamMode { ExhaustiveLattice, RandomGenerated };
std::string to_string(StreamMode m);
StreamMode stream_mode_from_string(const std::string& s);

struct StreamCaps {
  std::size_t lattice_ambient = 2500;    // exhaustive mode only below this ambient order
  std::size_t max_subgroup_order = 30000;
  std::size_t count = 1000;              // random mode: distinct subgroups wanted
  std::size_t attempts_per_item = 50;    // random mode: draws allowed per wanted subgroup
};

struct StreamItem {
  FiniteGroup group;
  std::uint64_t conjugates = 0;  // size of the conjugacy class; 0 in random mode
  std::string origin;
};

// Subgroups of an ambient group. ExhaustiveLattice yields one representative
// per conjugacy class (by cyclic extension); RandomGenerated draws seeded
// subgroups of GL_n(q) from structured families, deduplicated by element set.
class SubgroupStream {
 public:
  // Exhaustive lattice of an explicit ambient group. Throws ResourceLimit
  // above caps.lattice_ambient.
  SubgroupStream(const FiniteGroup& ambient, StreamCaps caps = {});
  // Either mode over GL_n(q).
  SubgroupStream(const GLContext& context, StreamMode mode, std::uint64_t seed, StreamCaps caps = {});

  StreamMode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<StreamItem>& items() const { return items_; }
  bool truncated() const { return truncated_; }
  std::size_t rejected_over_cap() const { return rejected_; }
  // Sum of class sizes over representatives (exhaustive mode).
  std::uint64_t total_subgroups() const;

 private:
  void run_lattice(const FiniteGroup& ambient);
  void run_random(const GLContext& context);

  StreamMode mode_;
  std::uint64_t seed_ = 0;
  StreamCaps caps_;
  std::vector<StreamItem> items_;
  bool truncated_ = false;
  std::size_t rejected_ = 0;
};

// Number of distinct subgroups, by closing all joins with cyclic subgroups
// without any conjugacy reduction. Used as the completeness self-test.
std::uint64_t count_subgroups_directly(const FiniteGroup& ambient, std::size_t cap = 500);

enum class LemmaAOutcome { Satisfied, Violated, OddOrderSkip };
std::string to_string(LemmaAOutcome o);

struct LemmaAVerdict {
  std::string subgroup;  // generators
  std::size_t order = 0;
  std::size_t involutions = 0;
  std::size_t involution_classes = 0;
  std::optional<GroupElement> best_involution;
  BigInt index;       // |H : C_H(g)| for the best g
  BigInt index_part;  // its p', heart part
  BigInt bound;
  LemmaAOutcome outcome = LemmaAOutcome::OddOrderSkip;
  // (class size, part) for every involution class.
  std::vector<std::pair<BigInt, BigInt>> class_table;
};

LemmaAVerdict lemma_a_check(const FiniteGroup& h, const GLContext& context);

struct LemmaACampaign {
  VerificationReport report;
  std::vector<LemmaAVerdict> verdicts;
};

LemmaACampaign lemma_a_campaign(std::size_t n, std::uint64_t q, StreamMode mode, std::uint64_t seed,
                                StreamCaps caps = {}, unsigned jobs = 1);

std::string lemma_a_csv_header();
std::string to_csv(const LemmaAVerdict& v);

}  // namespace tpv

#endif  // TPV_LEMMA_A_HPP
