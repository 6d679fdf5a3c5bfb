#include "rcech/cochain.hpp"

#include <stdexcept>

namespace rcech {

LevelOrbits level_orbits(const Nerve& nv, std::size_t n) {
  LevelOrbits out;
  const std::size_t size = nv.level_size(n);
  out.orbit_of.assign(size, 0);
  std::vector<char> seen(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (seen[i]) continue;
    std::size_t j = nv.involution(n, i);
    std::size_t id = out.rep.size();
    out.rep.push_back(i);
    out.fixed.push_back(j == i);
    out.orbit_of[i] = id;
    out.orbit_of[j] = id;
    seen[i] = seen[j] = 1;
  }
  return out;
}

CochainSpace cochain_space(const Nerve& nv, std::size_t n, const RealCoefficient& a) {
  CochainSpace sp;
  sp.level = n;
  sp.orbits = level_orbits(nv, n);
  const std::size_t ng = a.ngens();
  FixedSubgroup fs = fixed_subgroup(a);

  sp.embed.reserve(sp.orbits.num_orbits());
  std::vector<const IntMat*> rel_blocks;
  IntMat arel = a.relation_matrix();
  for (std::size_t o = 0; o < sp.orbits.num_orbits(); ++o) {
    sp.offset.push_back(sp.total);
    if (sp.orbits.fixed[o]) {
      sp.width.push_back(fs.gens.cols());
      sp.embed.push_back(fs.gens);
    } else {
      sp.width.push_back(ng);
      sp.embed.push_back(IntMat::identity(ng));
    }
    sp.total += sp.width.back();
  }
  // Relation columns, one block per orbit.
  std::vector<IntMat> blocks;
  for (std::size_t o = 0; o < sp.orbits.num_orbits(); ++o)
    blocks.push_back(sp.orbits.fixed[o] ? fs.relations : arel);
  sp.relations = block_diag(blocks);
  return sp;
}

IntVec value_at(const RealCoefficient& a, const CochainSpace& sp, const IntVec& coords,
                std::size_t simplex) {
  if (coords.size() != sp.total) throw std::invalid_argument("cochain: wrong coordinate length");
  std::size_t o = sp.orbits.orbit_of[simplex];
  IntVec block(sp.width[o]);
  for (std::size_t j = 0; j < sp.width[o]; ++j) block[j] = coords[sp.offset[o] + j];
  IntVec v = sp.embed[o].apply(block);
  if (simplex != sp.orbits.rep[o]) v = a.involution.apply(v);
  return a.reduce(v);
}

IntMat differential_matrix(const Nerve& nv, const RealCoefficient& a, const CochainSpace& src,
                           const CochainSpace& dst) {
  if (dst.level != src.level + 1)
    throw std::invalid_argument("differential: levels must be consecutive");
  const std::size_t n1 = dst.level;
  const std::size_t ng = a.ngens();
  IntMat arel = a.relation_matrix();
  FixedSubgroup fs = fixed_subgroup(a);
  IntMat d(dst.total, src.total);

  for (std::size_t o = 0; o < dst.orbits.num_orbits(); ++o) {
    std::size_t lam = dst.orbits.rep[o];
    // Ambient value of the differential at the representative, as a linear
    // map of source coordinates.
    IntMat m(ng, src.total);
    for (std::size_t k = 0; k <= n1; ++k) {
      std::size_t f = nv.face(n1, k, lam);
      std::size_t fo = src.orbits.orbit_of[f];
      IntMat block = src.embed[fo];
      if (f != src.orbits.rep[fo]) block = a.involution * block;
      Int sign = (k % 2 == 0) ? 1 : -1;
      for (std::size_t r = 0; r < ng; ++r)
        for (std::size_t c = 0; c < src.width[fo]; ++c)
          m(r, src.offset[fo] + c) += sign * block(r, c);
    }
    if (!dst.orbits.fixed[o]) {
      for (std::size_t r = 0; r < ng; ++r)
        for (std::size_t c = 0; c < src.total; ++c) d(dst.offset[o] + r, c) = m(r, c);
    } else {
      // The value is forced into the fixed subgroup; express it in the
      // fixed coordinates, column by column, modulo the coefficient
      // relations. Solvability is guaranteed by the reality of the image.
      for (std::size_t c = 0; c < src.total; ++c) {
        IntVec col(ng);
        for (std::size_t r = 0; r < ng; ++r) col[r] = m(r, c);
        auto y = solve_modulo_lattice(fs.gens, arel, col);
        if (!y) throw std::logic_error("differential: image escaped the fixed subgroup");
        for (std::size_t r = 0; r < dst.width[o]; ++r) d(dst.offset[o] + r, c) = (*y)[r];
      }
    }
  }
  return d;
}

bool is_real_table(const Nerve& nv, const RealCoefficient& a, const ValueTable& t,
                   std::string* why) {
  const std::size_t n = t.level;
  if (t.values.size() != nv.level_size(n)) {
    if (why) *why = "value table has wrong length for level " + std::to_string(n);
    return false;
  }
  for (const IntVec& v : t.values)
    if (v.size() != a.ngens()) {
      if (why) *why = "value has wrong coordinate count";
      return false;
    }
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    std::size_t j = nv.involution(n, i);
    if (!a.equal(t.values[j], a.involution.apply(t.values[i]))) {
      if (why)
        *why = "reality fails at simplex " + std::to_string(i) + " of level " + std::to_string(n);
      return false;
    }
  }
  return true;
}

ValueTable values_from_coords(const Nerve& nv, const RealCoefficient& a, const CochainSpace& sp,
                              const IntVec& coords) {
  ValueTable t;
  t.level = sp.level;
  t.values.resize(nv.level_size(sp.level));
  for (std::size_t i = 0; i < t.values.size(); ++i) t.values[i] = value_at(a, sp, coords, i);
  return t;
}

IntVec coords_from_values(const Nerve& nv, const RealCoefficient& a, const CochainSpace& sp,
                          const ValueTable& t) {
  std::string why;
  if (!is_real_table(nv, a, t, &why)) throw std::invalid_argument("cochain: " + why);
  IntMat arel = a.relation_matrix();
  IntVec coords(sp.total, 0);
  for (std::size_t o = 0; o < sp.orbits.num_orbits(); ++o) {
    const IntVec& v = t.values[sp.orbits.rep[o]];
    IntVec block;
    if (sp.orbits.fixed[o]) {
      auto y = solve_modulo_lattice(sp.embed[o], arel, v);
      if (!y) throw std::logic_error("cochain: fixed value escaped the fixed subgroup");
      block = *y;
    } else {
      block = v;  // free orbit coordinates are the ambient value itself
    }
    for (std::size_t j = 0; j < sp.width[o]; ++j) coords[sp.offset[o] + j] = block[j];
  }
  return coords;
}

ValueTable cup_product_11(const Nerve& nv, const ValueTable& a, const ValueTable& b) {
  if (a.level != 1 || b.level != 1)
    throw std::invalid_argument("cup product: both factors must be level 1");
  for (const auto& t : {&a, &b})
    for (const IntVec& v : t->values)
      if (v.size() != 1) throw std::invalid_argument("cup product: values must be single numbers");
  ValueTable out;
  out.level = 2;
  out.values.resize(nv.level_size(2));
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const std::vector<std::size_t>& t = nv.tuple(2, i);
    out.values[i] = {a.values[t[0]][0] * b.values[t[1]][0]};
  }
  return out;
}

}  // namespace rcech
