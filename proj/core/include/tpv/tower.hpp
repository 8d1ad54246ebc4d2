#ifndef TPV_TOWER_HPP
#define TPV_TOWER_HPP

#include <optional>
#include <vector>

#include "tpv/group.hpp"
#include "tpv/report.hpp"

namespace tpv {

// Projection tower of H <= H_1 x ... x H_r. Index i below is 0-based, so
// levels[i] covers components i..r-1.
struct TowerDecomposition {
  std::vector<FiniteGroup> factors;
  FiniteGroup h;
  std::vector<FiniteGroup> levels;       // L_i, tuples of components i..r-1
  std::vector<Homomorphism> projections;  // L_i -> L_{i+1}, i < r-1
  std::vector<FiniteGroup> kernels;      // T_i; T_{r-1} = L_{r-1}
  std::optional<std::size_t> first_even;  // k, or nullopt when every |T_i| is odd
};

// H must consist of Tuple elements with r components. factors may be empty,
// in which case each factor is taken to be the projection of H onto it.
TowerDecomposition build_tower(const FiniteGroup& h, std::size_t r, std::vector<FiniteGroup> factors = {});

// Image of a tuple element in levels[i].
GroupElement tower_component(const GroupElement& g, std::size_t i);

VerificationReport verify_oddnormal(const FiniteGroup& h, const FiniteGroup& n, const GroupElement& g);
VerificationReport verify_sylow_fusion(const FiniteGroup& h, const FiniteGroup& n, const GroupElement& g);
VerificationReport verify_tower_identity(const TowerDecomposition& tower, const GroupElement& g);

// Runs the three verifiers over seeded instances drawn from the construction
// library. Identical (seed, trials) give identical reports, for any jobs.
VerificationReport random_identity_campaign(std::uint64_t seed, std::size_t trials, unsigned jobs = 1);

}  // namespace tpv

#endif  // TPV_TOWER_HPP
