#ifndef TPV_MATGROUP_HPP
#define TPV_MATGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpv/group.hpp"
#include "tpv/report.hpp"

namespace tpv {

struct HypothesisFlags {
  bool p_at_least_7 = false;
  bool p_one_mod_3 = false;
  unsigned q_mod_4 = 0;
  // p >= 7 and p = 1 mod 3.
  bool lemma_hypothesis() const { return p_at_least_7 && p_one_mod_3; }
};

class GLContext {
 public:
  GLContext(std::size_t n, const FieldSpec& field);

  std::size_t n() const { return n_; }
  const FieldSpec& field() const { return *field_; }
  std::uint64_t q() const { return field_->order(); }
  BigInt order() const { return gl_order(static_cast<unsigned>(n_), BigInt(q())); }
  HypothesisFlags flags() const;

 private:
  std::size_t n_;
  const FieldSpec* field_;
};

GLContext gl_context(std::size_t n, std::uint32_t p, unsigned a);

enum class SylowConstruction { Presentation4q1, WreathEven, OddSplit, DiagonalWreath };
std::string to_string(SylowConstruction c);

struct InvolutionCensus {
  std::size_t total = 0;
  std::size_t central = 0;
  std::size_t non_central() const { return total - central; }
};

// The a, b of the order-4(q+1)_2 presentation for GL_2(q), q = 3 mod 4.
struct GL2Presentation {
  Matrix a;
  Matrix b;
  std::uint64_t a_order;
};

struct SylowTwoDescriptor {
  GLContext context;
  SylowConstruction construction;
  std::vector<GroupElement> generators;
  FiniteGroup group;
  InvolutionCensus census;
  std::optional<GL2Presentation> presentation;
};

// n = 2, q = 3 mod 4.
SylowTwoDescriptor sylow2_gl2(std::uint64_t q);
SylowTwoDescriptor sylow2_gl(std::size_t n, std::uint64_t q, std::size_t cap = kDefaultClosureCap);

InvolutionCensus involution_census(const FiniteGroup& p, const GLContext& context);

// Checks a^{order} = 1, b^4 = 1, b^2 = a^{order/2} and b^-1 a b = a^q.
bool presentation_relations_hold(const GL2Presentation& pres, std::uint64_t q);

// Statements 1..5 of the involution / order bounds for 2-subgroups of GL_n(q).
VerificationReport verify_sylowtwoingln(int statement, std::size_t n, std::uint64_t q,
                                        std::size_t cap = kDefaultClosureCap);

struct CensusRow {
  std::size_t n;
  std::uint64_t q;
  std::string construction;
  BigInt order;
  std::size_t involutions;
  std::size_t central;
  BigInt bound;
  std::string verdict;
};
CensusRow census_row(std::size_t n, std::uint64_t q, std::size_t cap = kDefaultClosureCap);
std::string census_csv_header();
std::string to_csv(const CensusRow& row);

}  // namespace tpv

#endif  // TPV_MATGROUP_HPP
