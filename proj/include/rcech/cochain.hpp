#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rcech/abelian.hpp"
#include "rcech/nerve.hpp"
#include "rcech/zlinalg.hpp"

namespace rcech {

// Orbits of a nerve level under the level involution. Orbits are numbered
// in order of first appearance; the representative is the lowest index.
struct LevelOrbits {
  std::vector<std::size_t> orbit_of;  // simplex -> orbit
  std::vector<std::size_t> rep;       // orbit -> representative simplex
  std::vector<char> fixed;            // orbit -> involution fixes the representative
  std::size_t num_orbits() const { return rep.size(); }
};

LevelOrbits level_orbits(const Nerve& nv, std::size_t n);

// Integer coordinates for the group of Real n-cochains. Each orbit owns a
// block: a free orbit stores the full coefficient value at its
// representative, a fixed orbit stores coordinates of the fixed subgroup.
// The group itself is the free group on all coordinates modulo the stacked
// relation columns.
struct CochainSpace {
  std::size_t level = 0;
  LevelOrbits orbits;
  std::vector<std::size_t> offset;  // orbit -> first coordinate
  std::vector<std::size_t> width;   // orbit -> number of coordinates
  std::size_t total = 0;
  IntMat relations;               // total x (number of relation columns)
  std::vector<IntMat> embed;      // orbit -> ambient value of the block, ngens x width
};

CochainSpace cochain_space(const Nerve& nv, std::size_t n, const RealCoefficient& a);

// Ambient coefficient value of the cochain with the given coordinates at
// one simplex (conjugate simplices read through the coefficient involution).
IntVec value_at(const RealCoefficient& a, const CochainSpace& sp, const IntVec& coords,
                std::size_t simplex);

// Matrix of the degree src.level differential, dst.level == src.level + 1.
// Columns are source coordinates, rows destination coordinates; the matrix
// is well defined modulo the destination relations.
IntMat differential_matrix(const Nerve& nv, const RealCoefficient& a, const CochainSpace& src,
                           const CochainSpace& dst);

// A cochain spelled out as its value on every simplex of one level.
struct ValueTable {
  std::size_t level = 0;
  std::vector<IntVec> values;  // [simplex][coefficient coordinate]
};

// Checks the reality condition value(tau s) == sigma(value(s)) modulo the
// coefficient relations. On failure *why names the offending simplex.
bool is_real_table(const Nerve& nv, const RealCoefficient& a, const ValueTable& t,
                   std::string* why = nullptr);

ValueTable values_from_coords(const Nerve& nv, const RealCoefficient& a, const CochainSpace& sp,
                              const IntVec& coords);

// Inverse of the above up to relations; throws when the table is not Real.
IntVec coords_from_values(const Nerve& nv, const RealCoefficient& a, const CochainSpace& sp,
                          const ValueTable& t);

// Product cochain of two level 1 tables with single coordinate values:
// out(g, h) = a(g) * b(h) on every 2-simplex (g, h).
ValueTable cup_product_11(const Nerve& nv, const ValueTable& a, const ValueTable& b);

}  // namespace rcech
