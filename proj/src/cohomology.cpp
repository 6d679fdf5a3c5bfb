#include "rcech/cohomology.hpp"

#include <numeric>
#include <stdexcept>

namespace rcech {

namespace {

// x-projection of the kernel of [m | -rel]: the lattice of vectors whose
// image under m lies in the relation lattice.
IntMat preimage_lattice(const IntMat& m, const IntMat& rel) {
  IntMat ker = kernel_basis(m.hstack(-rel));
  IntMat proj(m.cols(), ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) proj(i, j) = ker(i, j);
  return lattice_basis(proj);
}

// Relations of the subquotient: each column of sub expressed in the basis.
IntMat columns_in_basis(const IntMat& basis, const IntMat& sub, const char* what) {
  IntMat rel(basis.cols(), sub.cols());
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    auto u = solve_integer(basis, sub.col(j));
    if (!u) throw std::logic_error(std::string(what) + ": column escapes the lattice");
    rel.set_col(j, *u);
  }
  return rel;
}

}  // namespace

IntVec CohomologyResult::class_of(const IntVec& cochain_coords) const {
  auto u = solve_integer(cocycle_basis, cochain_coords);
  if (!u) throw std::invalid_argument("class_of: the vector is not a cocycle");
  return classes.coordinates(*u);
}

IntVec CohomologyResult::representative(const IntVec& class_coords) const {
  return cocycle_basis.apply(classes.lift(class_coords));
}

CohomologyResult real_cohomology(const Nerve& nv, std::size_t n, const RealCoefficient& a) {
  if (nv.max_level < n + 1)
    throw std::invalid_argument("real_cohomology: nerve too shallow for degree " +
                                std::to_string(n));
  a.validate();
  CohomologyResult res;
  res.degree = n;
  res.space = cochain_space(nv, n, a);
  CochainSpace above = cochain_space(nv, n + 1, a);
  IntMat d_n = differential_matrix(nv, a, res.space, above);

  res.cocycle_basis = preimage_lattice(d_n, above.relations);

  IntMat bound = res.space.relations;
  if (n >= 1) {
    CochainSpace below = cochain_space(nv, n - 1, a);
    IntMat d_prev = differential_matrix(nv, a, below, res.space);
    bound = d_prev.hstack(bound);
  }
  res.classes = ClassGroup(res.cocycle_basis.cols(),
                           columns_in_basis(res.cocycle_basis, bound, "boundaries"));
  res.invariants = res.classes.invariants();
  return res;
}

AbelianInvariants real_cohomology(const RealGroupoid& g, std::size_t n, const RealCoefficient& a,
                                  std::size_t level_budget) {
  Nerve nv = build_nerve(g, n + 1, level_budget);
  return real_cohomology(nv, n, a).invariants;
}

AbelianInvariants degree_zero_by_components(const RealGroupoid& g, const RealCoefficient& a) {
  a.validate();
  // Union objects along arrows.
  std::vector<std::size_t> parent(g.num_objects);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& arrow : g.arrows) parent[find(arrow.src)] = find(arrow.tgt);

  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.num_objects; ++x)
    if (find(x) == x) reps.push_back(x);

  AbelianInvariants total;  // trivial
  AbelianInvariants full = coefficient_invariants(a);
  AbelianInvariants fixed_part = fixed_subgroup(a).invariants;
  std::vector<char> done(g.num_objects, 0);
  for (std::size_t r : reps) {
    if (done[r]) continue;
    std::size_t conj = find(g.obj_involution[r]);
    done[r] = done[conj] = 1;
    total = direct_sum(total, conj == r ? fixed_part : full);
  }
  return total;
}

AbelianInvariants plain_cohomology(const RealGroupoid& g, std::size_t n, const RealCoefficient& a,
                                   std::size_t level_budget) {
  return real_cohomology(trivialize(g), n, underlying_group(a), level_budget);
}

DualComplex dual_complex(const Nerve& nv) {
  DualComplex dc;
  const std::size_t top = nv.max_level;
  dc.orbits.resize(top + 1);
  dc.relations.resize(top + 1);
  dc.boundary.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    dc.orbits[n] = level_orbits(nv, n);
    const LevelOrbits& o = dc.orbits[n];
    std::vector<std::size_t> fixed;
    for (std::size_t i = 0; i < o.num_orbits(); ++i)
      if (o.fixed[i]) fixed.push_back(i);
    IntMat rel(o.num_orbits(), fixed.size());
    for (std::size_t j = 0; j < fixed.size(); ++j) rel(fixed[j], j) = 2;
    dc.relations[n] = rel;
  }
  for (std::size_t n = 1; n <= top; ++n) {
    const LevelOrbits& src = dc.orbits[n];
    const LevelOrbits& dst = dc.orbits[n - 1];
    IntMat b(dst.num_orbits(), src.num_orbits());
    for (std::size_t o = 0; o < src.num_orbits(); ++o) {
      std::size_t lam = src.rep[o];
      for (std::size_t k = 0; k <= n; ++k) {
        std::size_t f = nv.face(n, k, lam);
        std::size_t fo = dst.orbit_of[f];
        Int sign = (k % 2 == 0) ? 1 : -1;
        if (f != dst.rep[fo]) sign = -sign;  // conjugate reads flip
        b(fo, o) += sign;
      }
    }
    dc.boundary[n] = b;
  }
  return dc;
}

std::string CircleCohomology::to_string() const {
  if (circle_rank == 0) return finite.to_string();
  std::string out = circle_rank == 1 ? "S1" : "(S1)^" + std::to_string(circle_rank);
  if (!finite.trivial()) out += " + " + finite.to_string();
  return out;
}

CircleCohomology circle_cohomology(const Nerve& nv, std::size_t n) {
  if (nv.max_level < n + 1)
    throw std::invalid_argument("circle_cohomology: nerve too shallow for degree " +
                                std::to_string(n));
  DualComplex dc = dual_complex(nv);
  CircleCohomology res;
  res.degree = n;
  res.orbits = dc.orbits[n];

  const std::size_t gens = dc.orbits[n].num_orbits();
  if (n == 0) {
    res.cycle_basis = IntMat::identity(gens);
  } else {
    res.cycle_basis = preimage_lattice(dc.boundary[n], dc.relations[n - 1]);
  }
  IntMat bound = dc.boundary[n + 1].hstack(dc.relations[n]);
  res.homology = ClassGroup(res.cycle_basis.cols(),
                            columns_in_basis(res.cycle_basis, bound, "dual boundaries"));
  const AbelianInvariants& h = res.homology.invariants();
  res.circle_rank = h.rank;
  res.finite.rank = 0;
  res.finite.torsion = h.torsion;  // a finite group is isomorphic to its dual
  return res;
}

std::string circle_cohomology_string(const RealGroupoid& g, std::size_t n,
                                     std::size_t level_budget) {
  Nerve nv = build_nerve(g, n + 1, level_budget);
  return circle_cohomology(nv, n).to_string();
}

}  // namespace rcech
