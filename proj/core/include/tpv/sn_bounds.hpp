#ifndef TPV_SN_BOUNDS_HPP
#define TPV_SN_BOUNDS_HPP

#include <string>
#include <vector>

#include "tpv/group.hpp"
#include "tpv/report.hpp"

namespace tpv {

enum class SnBoundKind { OddSn, SnInvolutions };
std::string to_string(SnBoundKind k);

// Transitive with no nontrivial block system. Throws InvalidArgument for
// non-permutation groups.
bool is_primitive(const FiniteGroup& g);

// OddSn: odd |H| < n^(log2 n). SnInvolutions: some involution g with
// |H:C_H(g)| < 42^((n-2)/2). Imprimitive H or the wrong parity gives
// not-applicable.
VerificationReport sn_bound_check(SnBoundKind kind, const FiniteGroup& h);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};
// Primitive groups of the given degree built from the standard families:
// affine subgroups C_p:C_d, A_n and S_n (n <= 7), PSL_2(p) on p + 1 points.
std::vector<NamedGroup> primitive_instances(std::size_t degree);

}  // namespace tpv

#endif  // TPV_SN_BOUNDS_HPP
