#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rcech/cohomology.hpp"
#include "rcech/groupoid.hpp"
#include "rcech/nerve.hpp"

namespace rcech {

// An element of the group of Real graded central extensions: a grading
// class (degree one, two element coefficients) and a twist class (degree
// two, circle coefficients), both in canonical factor coordinates. Twist
// numerators are stored over the torsion factor orders of the degree two
// circle cohomology; its circle factors split off and are tracked only as
// a rank.
struct ExtElement {
  IntVec grading;
  IntVec twist_num;
  bool operator==(const ExtElement& o) const = default;
};

// The group law twists the sum of the twist parts by the cup product of
// the grading parts pushed into the circle (1 -> 1/2). That cocycle is
// symmetric up to coboundaries, so the group is abelian.
class ExtGroup {
 public:
  explicit ExtGroup(const Nerve& nv);

  const AbelianInvariants& grading_invariants() const { return grading_.invariants; }
  const CircleCohomology& twist() const { return twist_; }
  long long circle_rank() const { return twist_.circle_rank; }

  ExtElement zero() const;
  ExtElement multiply(const ExtElement& a, const ExtElement& b) const;
  ExtElement inverse(const ExtElement& a) const;
  ExtElement power(ExtElement a, Int k) const;

  Int finite_order() const;
  std::vector<ExtElement> elements(std::size_t budget = std::size_t(1) << 20) const;

  // Isomorphism type of the finite part, by order counting.
  AbelianInvariants finite_invariants() const;

  // Does the finite part split as (grading part) + (twist torsion)? True
  // exactly when every grading factor generator lifts to an element of the
  // same order.
  bool splits() const;

  // Coordinates of the twist class of a circle valued two cochain whose
  // values are the given halves (0 or 1 per two simplex, meaning 0 or 1/2).
  IntVec twist_class_of_halves(const std::vector<int>& halves) const;

  // Same for values numerators[s]/den; the pairing with every torsion
  // cycle must land in (1/order)Z, which holds for every cocycle.
  IntVec twist_class(const std::vector<Int>& numerators, const Int& den) const;

  // Element with the class of the given Real cochains: delta a level 1
  // cocycle over Z/2, omega a level 2 circle cocycle with values
  // numerators[s]/den. The nerve must be the one the group was built on.
  ExtElement element_from_cochains(const Nerve& nv, const ValueTable& delta,
                                   const std::vector<Int>& omega_numerators, const Int& den) const;

 private:
  CohomologyResult grading_;
  CircleCohomology twist_;
  std::size_t num_torsion_ = 0;           // torsion factors of the twist
  std::vector<IntVec> torsion_cycles_;    // factor generator cycles, orbit coordinates
  // pairing_[i][j] = twist numerators of iota(delta_i cup delta_j)
  std::vector<std::vector<IntVec>> pairing_;
};

// Assembled Real graded Brauer group: the degree zero type part (mod eight
// coefficients), the grading part, and the circle twist part.
struct BrauerGroup {
  AbelianInvariants type_part;   // degree zero, Z/8 coefficients
  AbelianInvariants ext_finite;  // finite part of the extension group
  bool ext_splits = false;
  long long circle_rank = 0;
  // Set on free involutions: the input is a doubled complex groupoid, where
  // the plain graded theory replaces the order eight type factor by its mod
  // two image; the assembled value below keeps the order eight convention.
  bool free_involution_note = false;

  AbelianInvariants total_finite() const { return direct_sum(type_part, ext_finite); }
  std::string to_string() const;
};

ExtGroup ext_group(const RealGroupoid& g, std::size_t level_budget = kDefaultLevelBudget);
BrauerGroup brauer_group(const RealGroupoid& g, std::size_t level_budget = kDefaultLevelBudget);

}  // namespace rcech
