#pragma once

#include "rcech/zlinalg.hpp"

#include <string>
#include <vector>

namespace rcech {

// Coefficient group with involution. Elements are integer coordinate
// vectors, one coordinate per cyclic factor; orders[i] == 0 means a Z
// factor, orders[i] == m >= 2 a Z/m factor. The involution acts as an
// integer matrix on coordinates and must preserve the relation lattice.
//
// The circle group S^1 (with complex conjugation) is kept symbolic:
// circle == true, and the cohomology engine routes it through the
// Pontryagin-dual complex instead of coordinates.
struct RealCoefficient {
  std::string name;
  std::vector<Int> orders;
  IntMat involution;
  bool circle = false;

  std::size_t ngens() const { return orders.size(); }
  bool is_finite() const;
  Int order() const;
  bool trivial_involution() const;

  // Columns m_i * e_i for each finite factor.
  IntMat relation_matrix() const;

  IntVec reduce(IntVec x) const;
  IntVec involve(const IntVec& x) const;
  IntVec add(const IntVec& x, const IntVec& y) const;
  IntVec sub(const IntVec& x, const IntVec& y) const;
  IntVec negate(const IntVec& x) const;
  IntVec zero() const { return IntVec(ngens()); }
  bool equal(const IntVec& x, const IntVec& y) const;
  bool is_zero(const IntVec& x) const;

  // All elements in canonical coordinate order; finite groups only.
  std::vector<IntVec> elements() const;

  // Throws std::invalid_argument on an ill-formed involution.
  void validate() const;
};

// A^sigma presented by independent generator columns inside A plus a
// relation matrix among those generators.
struct FixedSubgroup {
  IntMat gens;       // ngens(A) x k
  IntMat relations;  // k x r
  AbelianInvariants invariants;
};

FixedSubgroup fixed_subgroup(const RealCoefficient& a);

AbelianInvariants coefficient_invariants(const RealCoefficient& a);

// Same underlying group, involution forgotten.
RealCoefficient underlying_group(const RealCoefficient& a);

RealCoefficient coeff_Z(int sign = 1);
RealCoefficient coeff_Zm(const Int& m, int sign = 1);
RealCoefficient coeff_circle();
RealCoefficient coeff_custom(std::vector<Int> orders, IntMat involution, std::string name);

// Literals: "Z", "Z(0,1)", "Z2", "Z8" (any "Z<m>"), "Zm(m,+1)", "Zm(m,-1)", "S1".
RealCoefficient parse_coefficient(const std::string& literal);

}  // namespace rcech
