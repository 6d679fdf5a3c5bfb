#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rcech/abelian.hpp"
#include "rcech/cochain.hpp"
#include "rcech/nerve.hpp"
#include "rcech/zlinalg.hpp"

namespace rcech {

// Degree n Real cohomology together with the data needed to reduce
// concrete cocycles to canonical class coordinates and back.
struct CohomologyResult {
  std::size_t degree = 0;
  AbelianInvariants invariants;
  CochainSpace space;     // coordinates of the degree n cochains
  IntMat cocycle_basis;   // lattice basis of the cocycles, in those coordinates
  ClassGroup classes;     // cocycles modulo boundaries

  // Canonical coordinates of a cocycle, one entry per cyclic factor.
  IntVec class_of(const IntVec& cochain_coords) const;
  // A representative cocycle for the given class coordinates.
  IntVec representative(const IntVec& class_coords) const;
};

// The nerve must reach level n + 1.
CohomologyResult real_cohomology(const Nerve& nv, std::size_t n, const RealCoefficient& a);

// Convenience wrapper building the nerve itself.
AbelianInvariants real_cohomology(const RealGroupoid& g, std::size_t n, const RealCoefficient& a,
                                  std::size_t level_budget = kDefaultLevelBudget);

// Independent degree zero computation: invariant functions decompose over
// connected components and their involution orbits, no matrices involved.
AbelianInvariants degree_zero_by_components(const RealGroupoid& g, const RealCoefficient& a);

// Ordinary (involution free) cohomology of the underlying groupoid, used as
// the folding target for swap doubles.
AbelianInvariants plain_cohomology(const RealGroupoid& g, std::size_t n, const RealCoefficient& a,
                                   std::size_t level_budget = kDefaultLevelBudget);

// Chain complex of nerve orbits: a free generator per free orbit, an order
// two generator per fixed simplex. Boundaries read each face through its
// orbit representative, with a sign flip on conjugate reads. Circle valued
// Real cochains are exactly the homomorphisms from this complex into R/Z.
struct DualComplex {
  std::vector<LevelOrbits> orbits;    // levels 0..max_level
  std::vector<IntMat> relations;      // [n]: columns 2 e_o at fixed orbits
  std::vector<IntMat> boundary;       // [n]: D_n -> D_{n-1} for n >= 1; [0] unused
};

DualComplex dual_complex(const Nerve& nv);

// Degree n cohomology with circle coefficients (the circle carrying the
// conjugation involution), computed as Hom of the orbit complex homology
// into R/Z. Divisibility of R/Z makes this exact, so the answer is a
// product of circles (one per free homology rank) and the finite dual of
// the homology torsion.
struct CircleCohomology {
  std::size_t degree = 0;
  long long circle_rank = 0;
  AbelianInvariants finite;  // rank 0

  LevelOrbits orbits;   // degree n orbit structure (domain of value tables)
  IntMat cycle_basis;   // columns in orbit coordinates
  ClassGroup homology;  // cycles modulo boundaries

  bool trivial() const { return circle_rank == 0 && finite.trivial(); }
  Int finite_order() const { return finite.order(); }
  std::string to_string() const;  // "0", "S1 + Z/2", "(S1)^2", "Z/3", ...
};

// The nerve must reach level n + 1.
CircleCohomology circle_cohomology(const Nerve& nv, std::size_t n);

std::string circle_cohomology_string(const RealGroupoid& g, std::size_t n,
                                     std::size_t level_budget = kDefaultLevelBudget);

}  // namespace rcech
