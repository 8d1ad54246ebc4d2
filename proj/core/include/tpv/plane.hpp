#ifndef TPV_PLANE_HPP
#define TPV_PLANE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tpv/group.hpp"
#include "tpv/report.hpp"

namespace tpv {

// Point/line incidence structure of order x. Construction verifies the
// projective plane axioms and throws InvalidArgument if they fail.
class IncidencePlane {
 public:
  IncidencePlane(std::size_t points, std::vector<std::vector<std::uint32_t>> lines);

  std::size_t order() const { return order_; }
  std::size_t point_count() const { return point_lines_.size(); }
  std::size_t line_count() const { return line_points_.size(); }
  const std::vector<std::uint32_t>& points_on(std::uint32_t line) const { return line_points_[line]; }
  const std::vector<std::uint32_t>& lines_through(std::uint32_t point) const { return point_lines_[point]; }
  bool incident(std::uint32_t point, std::uint32_t line) const {
    return incidence_.test(static_cast<std::size_t>(line) * point_count() + point);
  }
  std::uint32_t line_through(std::uint32_t a, std::uint32_t b) const;

  // Set for planes built by pg2().
  const FieldSpec* field() const { return field_; }
  const std::vector<std::uint32_t>& point_coordinates(std::uint32_t point) const { return coords_.at(point); }
  std::uint32_t point_index(const std::vector<std::uint32_t>& vector) const;

 private:
  friend IncidencePlane pg2(std::uint64_t q);

  std::size_t order_;
  std::vector<std::vector<std::uint32_t>> line_points_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
  boost::dynamic_bitset<> incidence_;
  const FieldSpec* field_ = nullptr;
  std::vector<std::vector<std::uint32_t>> coords_;
  std::vector<std::uint32_t> index_by_code_;
};

// PG(2,q); even q is accepted here.
IncidencePlane pg2(std::uint64_t q);

class Collineation {
 public:
  // Throws InvalidArgument unless the point permutation maps lines to lines.
  Collineation(const IncidencePlane& plane, Permutation points);

  const Permutation& points() const { return points_; }
  const Permutation& lines() const { return lines_; }

 private:
  Permutation points_;
  Permutation lines_;
};

// v -> (v^sigma) M on coordinate rows, sigma = x -> x^(p^frobenius_power).
Collineation semilinear_collineation(const IncidencePlane& plane, const Matrix& m, unsigned frobenius_power = 0);
// x -> x^u coordinatewise on PG(2,u^2).
Collineation frobenius_collineation(const IncidencePlane& plane);

struct FixedStructure {
  std::vector<std::uint32_t> fixed_points;
  std::vector<std::uint32_t> fixed_lines;
  std::optional<std::size_t> subplane_order;
  // "u^2+u+1", "u^2+1", "u^2+2", "other", or "n/a" when the order is not a square.
  std::string spectrum;
};
FixedStructure fixed_structure(const IncidencePlane& plane, const Collineation& g);

// A collineation group on the points of a plane with a base point alpha.
class PlaneGroup {
 public:
  PlaneGroup(std::shared_ptr<const IncidencePlane> plane, FiniteGroup group, std::uint32_t alpha = 0);

  const IncidencePlane& plane() const { return *plane_; }
  const FiniteGroup& group() const { return group_; }
  std::uint32_t alpha() const { return alpha_; }
  bool transitive() const { return transitive_; }
  const FiniteGroup& point_stabilizer() const { return stabilizer_; }

 private:
  std::shared_ptr<const IncidencePlane> plane_;
  FiniteGroup group_;
  std::uint32_t alpha_;
  bool transitive_;
  FiniteGroup stabilizer_;
};

// Normalizer of a Singer cycle in PGammaL_3(q): <x -> wx, x -> x^p> acting on
// GF(q^3)*/GF(q)*, written in coordinates of pg2(q). Order (q^2+q+1)*3a.
// Base point is the point of 1, whose stabilizer is the Frobenius group.
struct SingerNormalizer {
  PlaneGroup group;
  GroupElement singer;     // order q^2+q+1
  GroupElement frobenius;  // x -> x^p, order 3a
};
SingerNormalizer singer_normalizer(std::uint64_t q);

VerificationReport counting_identity_check(const PlaneGroup& g, const GroupElement& involution);

// Generic transitive permutation group with base point alpha; K <= G_alpha.
VerificationReport fixpoint_transitivity_check(const FiniteGroup& g, std::uint32_t alpha, const FiniteGroup& k);
VerificationReport fixpoint_transitivity_check(const PlaneGroup& g, const FiniteGroup& k);

struct OddSearchBudget {
  std::size_t closure_elements = 100'000;
  std::size_t candidates = 1'000;
};
struct OddSearchResult {
  std::optional<FiniteGroup> witness;  // nullopt = exhausted
  std::size_t candidates_tried = 0;
};
OddSearchResult odd_transitive_search(const FiniteGroup& g, OddSearchBudget budget = {});

// Plane summary as JSON and the 0/1 incidence matrix (lines as rows) as CSV.
std::string plane_to_json(const IncidencePlane& plane);
std::string incidence_csv(const IncidencePlane& plane);

}  // namespace tpv

#endif  // TPV_PLANE_HPP
