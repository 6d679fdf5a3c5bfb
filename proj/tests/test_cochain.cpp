#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "rcech/cochain.hpp"
#include "rcech/samples.hpp"

using namespace rcech;

TEST_CASE("orbit scan, lowest index representatives") {
  Nerve nv = build_nerve(sample_groupoid("z4_inv"), 2);
  LevelOrbits o = level_orbits(nv, 1);  // tau: 0,3,2,1
  REQUIRE(o.num_orbits() == 3);
  CHECK(o.rep == std::vector<std::size_t>{0, 1, 2});
  CHECK(o.fixed[0]);
  CHECK_FALSE(o.fixed[1]);
  CHECK(o.fixed[2]);
  CHECK(o.orbit_of[3] == 1);
}

TEST_CASE("cochain coordinates: full value on free orbits, fixed subgroup on fixed ones") {
  Nerve nv = build_nerve(sample_groupoid("z4_inv"), 2);
  RealCoefficient a = coeff_Zm(4, -1);
  CochainSpace sp = cochain_space(nv, 1, a);
  REQUIRE(sp.total == 3);  // Z/2 at arrow 0, Z/4 at the {1,3} orbit, Z/2 at arrow 2
  CHECK(sp.width == std::vector<std::size_t>{1, 1, 1});
  CHECK(sp.embed[0](0, 0) == 2);  // fixed values are the multiples of 2
  CHECK(sp.embed[1](0, 0) == 1);
  CHECK(sp.embed[2](0, 0) == 2);
  AbelianInvariants inv = quotient_invariants(sp.total, sp.relations);
  CHECK(inv.to_string() == "Z/2 + Z/2 + Z/4");
}

TEST_CASE("values read through the coefficient involution on conjugates") {
  Nerve nv = build_nerve(sample_groupoid("z4_inv"), 2);
  RealCoefficient a = coeff_Zm(4, -1);
  CochainSpace sp = cochain_space(nv, 1, a);
  IntVec coords = {1, 1, 1};  // value 2 at arrow 0, 1 at arrow 1, 2 at arrow 2
  CHECK(value_at(a, sp, coords, 0) == IntVec{2});
  CHECK(value_at(a, sp, coords, 1) == IntVec{1});
  CHECK(value_at(a, sp, coords, 3) == IntVec{3});  // sigma of the value at arrow 1
  CHECK(value_at(a, sp, coords, 2) == IntVec{2});
}

TEST_CASE("differential of the inversion twisted cyclic group of order four") {
  Nerve nv = build_nerve(sample_groupoid("z4_inv"), 2);
  RealCoefficient a = coeff_Zm(4, -1);
  CochainSpace c1 = cochain_space(nv, 1, a);
  CochainSpace c2 = cochain_space(nv, 2, a);
  IntMat d1 = differential_matrix(nv, a, c1, c2);

  // (d c)(1,1) = c(1) - c(2) + c(1): ambient row 2*u1 - 2*u2 at the free
  // orbit of (1,1).
  std::size_t i11 = nv.index_of(2, {1, 1});
  std::size_t o11 = c2.orbits.orbit_of[i11];
  REQUIRE_FALSE(c2.orbits.fixed[o11]);
  REQUIRE(c2.orbits.rep[o11] == i11);
  std::size_t r = c2.offset[o11];
  CHECK(d1(r, 0) == 0);
  CHECK(d1(r, 1) == 2);
  CHECK(d1(r, 2) == -2);

  // (d c)(2,2) = 2 c(2) - c(0): ambient 4*u2 - 2*u0, which is -2*u0 mod 4;
  // in the fixed coordinates of the target this reads as an odd multiple
  // of u0 and an even contribution from u2.
  std::size_t i22 = nv.index_of(2, {2, 2});
  std::size_t o22 = c2.orbits.orbit_of[i22];
  REQUIRE(c2.orbits.fixed[o22]);
  std::size_t r2 = c2.offset[o22];
  CHECK(d1(r2, 0) % 2 != 0);
  CHECK(d1(r2, 1) % 2 == 0);
  CHECK(d1(r2, 2) % 2 == 0);
}

TEST_CASE("differential squares to zero modulo relations") {
  std::vector<std::string> names = {"z2",        "z4_inv",       "pair2_swap",
                                    "orientifold_ab", "double_z3", "z2z2"};
  std::vector<RealCoefficient> coeffs = {coeff_Z(+1), coeff_Z(-1), coeff_Zm(2, +1),
                                         coeff_Zm(4, -1), coeff_Zm(8, +1)};
  for (const auto& name : names) {
    Nerve nv = build_nerve(sample_groupoid(name), 3);
    for (const auto& a : coeffs) {
      CochainSpace c0 = cochain_space(nv, 0, a);
      CochainSpace c1 = cochain_space(nv, 1, a);
      CochainSpace c2 = cochain_space(nv, 2, a);
      CochainSpace c3 = cochain_space(nv, 3, a);
      IntMat d0 = differential_matrix(nv, a, c0, c1);
      IntMat d1 = differential_matrix(nv, a, c1, c2);
      IntMat d2 = differential_matrix(nv, a, c2, c3);
      IntMat dd1 = d1 * d0;
      IntMat dd2 = d2 * d1;
      for (std::size_t j = 0; j < dd1.cols(); ++j)
        REQUIRE(in_column_lattice(c2.relations, dd1.col(j)));
      for (std::size_t j = 0; j < dd2.cols(); ++j)
        REQUIRE(in_column_lattice(c3.relations, dd2.col(j)));
    }
  }
}

TEST_CASE("every coordinate vector describes a Real cochain") {
  std::mt19937 rng(20240812);
  for (const auto& name : {"z4_inv", "pair2_swap", "orientifold_ab"}) {
    Nerve nv = build_nerve(sample_groupoid(name), 2);
    for (const auto& a : {coeff_Zm(4, -1), coeff_Z(-1), coeff_Zm(8, +1)}) {
      for (std::size_t n = 0; n <= 2; ++n) {
        CochainSpace sp = cochain_space(nv, n, a);
        for (int trial = 0; trial < 5; ++trial) {
          IntVec coords(sp.total);
          for (auto& x : coords) x = static_cast<int>(rng() % 13) - 6;
          ValueTable t = values_from_coords(nv, a, sp, coords);
          REQUIRE(is_real_table(nv, a, t));
          // Round trip agrees as group elements.
          IntVec back = coords_from_values(nv, a, sp, t);
          ValueTable t2 = values_from_coords(nv, a, sp, back);
          for (std::size_t i = 0; i < t.values.size(); ++i)
            REQUIRE(a.equal(t.values[i], t2.values[i]));
        }
      }
    }
  }
}

TEST_CASE("reality check rejects asymmetric tables") {
  Nerve nv = build_nerve(sample_groupoid("z4_inv"), 1);
  RealCoefficient a = coeff_Zm(4, -1);
  ValueTable t;
  t.level = 1;
  t.values = {{0}, {1}, {2}, {1}};  // needs value 3 at arrow 3
  std::string why;
  CHECK_FALSE(is_real_table(nv, a, t, &why));
  CHECK(why.find("simplex") != std::string::npos);
  CochainSpace sp = cochain_space(nv, 1, a);
  CHECK_THROWS(coords_from_values(nv, a, sp, t));
  t.values[3] = {3};
  CHECK(is_real_table(nv, a, t, &why));
  // Fixed arrows must carry fixed values.
  t.values[0] = {1};
  CHECK_FALSE(is_real_table(nv, a, t, &why));
}

TEST_CASE("cup product multiplies front and back values") {
  Nerve nv = build_nerve(sample_groupoid("z2"), 2);
  ValueTable d;
  d.level = 1;
  d.values = {{0}, {1}};  // the identity character of the two element group
  ValueTable c = cup_product_11(nv, d, d);
  REQUIRE(c.level == 2);
  for (std::size_t i = 0; i < nv.level_size(2); ++i) {
    const auto& t = nv.tuple(2, i);
    CHECK(c.values[i][0] == (t[0] == 1 && t[1] == 1 ? 1 : 0));
  }
}
