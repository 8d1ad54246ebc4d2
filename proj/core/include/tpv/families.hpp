#ifndef TPV_FAMILIES_HPP
#define TPV_FAMILIES_HPP

// Constructed groups used as test instances and campaign building blocks.

#include <cstdint>
#include <vector>

#include "tpv/group.hpp"

namespace tpv::families {

FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
// Generated by an n-cycle.
FiniteGroup cyclic(std::size_t n);
// Symmetries of an n-gon on n points (order 2n), n >= 3.
FiniteGroup dihedral(std::size_t n);

// <a, b | a^n = 1, b^2 = a^s, b^-1 a b = a^r> in its right regular
// permutation representation on 2n points.
FiniteGroup metacyclic(std::uint32_t n, std::uint32_t r, std::uint32_t s);
FiniteGroup quaternion(std::uint32_t order);     // generalized quaternion, order >= 8
FiniteGroup semidihedral(std::uint32_t order);   // order >= 16
FiniteGroup dihedral_regular(std::uint32_t order);

// C_p : C_d inside AGL_1(p) acting on p points; d | p - 1.
FiniteGroup affine(std::uint32_t p, std::uint32_t d);
// PSL_2(p) on the p + 1 points of the projective line.
FiniteGroup psl2_natural(std::uint32_t p);

// Induced action of a permutation group on unordered pairs {i,j}, i < j, in lexicographic order.
FiniteGroup on_pairs(const FiniteGroup& g);

// Direct product as a Tuple-shaped group generated by the embedded factor generators.
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);
// {(x, x, ..., x)} in the r-fold product.
FiniteGroup diagonal(const FiniteGroup& g, std::size_t r);
// H wr S given by top permutation generators, in WreathPair shape.
FiniteGroup wreath(const FiniteGroup& base, const FiniteGroup& top);

// C_m : Q_8 with Q_8 acting on C_m by inversion through a quotient of order 2,
// realized on m + 8 points. O(G) = C_m for odd m.
FiniteGroup cyclic_by_quaternion(std::uint32_t m);

FiniteGroup gl(std::size_t n, std::uint64_t q);
FiniteGroup sl(std::size_t n, std::uint64_t q);

}  // namespace tpv::families

#endif  // TPV_FAMILIES_HPP
