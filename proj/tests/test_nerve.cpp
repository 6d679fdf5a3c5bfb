#include <catch2/catch_amalgamated.hpp>

#include "rcech/budget.hpp"
#include "rcech/nerve.hpp"
#include "rcech/samples.hpp"

using namespace rcech;

TEST_CASE("nerve level sizes") {
  Nerve nz4 = build_nerve(sample_groupoid("z4"), 3);
  CHECK(nz4.level_size(0) == 1);
  CHECK(nz4.level_size(1) == 4);
  CHECK(nz4.level_size(2) == 16);  // one object: every pair composes
  CHECK(nz4.level_size(3) == 64);

  Nerve np = build_nerve(sample_groupoid("pair2"), 2);
  CHECK(np.level_size(0) == 2);
  CHECK(np.level_size(1) == 4);
  CHECK(np.level_size(2) == 8);  // each arrow extends by the two arrows into its source

  Nerve ns = build_nerve(sample_groupoid("points3_mixed"), 3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(ns.level_size(n) == 3);  // units only
}

TEST_CASE("nerve enumeration is lexicographic and level one lists arrows in order") {
  Nerve nv = build_nerve(sample_groupoid("double_z3"), 3);
  for (std::size_t a = 0; a < 6; ++a) CHECK(nv.tuple(1, a) == std::vector<std::size_t>{a});
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t i = 1; i < nv.level_size(n); ++i)
      CHECK(nv.tuple(n, i - 1) < nv.tuple(n, i));
  CHECK(nv.index_of(2, nv.tuple(2, 5)) == 5);
  CHECK_THROWS(nv.index_of(2, {0, 3}));  // different copies never compose
}

TEST_CASE("faces of a single arrow are its endpoints") {
  Nerve nv = build_nerve(sample_groupoid("pair2"), 2);
  // Arrow x*2+y runs y -> x: face 0 is the source, face 1 the range.
  CHECK(nv.face(1, 0, 1) == 1);
  CHECK(nv.face(1, 1, 1) == 0);
  CHECK(nv.face(1, 0, 0) == 0);
  CHECK(nv.face(1, 1, 0) == 0);
}

TEST_CASE("inner faces compose, outer faces drop") {
  Nerve nv = build_nerve(sample_groupoid("z4"), 3);
  std::size_t i = nv.index_of(2, {1, 2});
  CHECK(nv.tuple(1, nv.face(2, 0, i)) == std::vector<std::size_t>{2});
  CHECK(nv.tuple(1, nv.face(2, 1, i)) == std::vector<std::size_t>{3});  // 1+2
  CHECK(nv.tuple(1, nv.face(2, 2, i)) == std::vector<std::size_t>{1});
  std::size_t j = nv.index_of(3, {1, 2, 3});
  CHECK(nv.tuple(2, nv.face(3, 0, j)) == std::vector<std::size_t>{2, 3});
  CHECK(nv.tuple(2, nv.face(3, 1, j)) == std::vector<std::size_t>{3, 3});
  CHECK(nv.tuple(2, nv.face(3, 2, j)) == std::vector<std::size_t>{1, 1});
  CHECK(nv.tuple(2, nv.face(3, 3, j)) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("simplicial identities hold on every sample") {
  for (const std::string& name : sample_names()) {
    Nerve nv = build_nerve(sample_groupoid(name), 4);
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t i = 0; i < nv.level_size(n); ++i)
        for (std::size_t k = 1; k <= n; ++k)
          for (std::size_t j = 0; j < k; ++j)
            REQUIRE(nv.face(n - 1, j, nv.face(n, k, i)) ==
                    nv.face(n - 1, k - 1, nv.face(n, j, i)));
  }
}

TEST_CASE("level involutions are equivariant square roots of the identity") {
  for (const std::string& name : sample_names()) {
    Nerve nv = build_nerve(sample_groupoid(name), 4);
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t i = 0; i < nv.level_size(n); ++i)
        REQUIRE(nv.involution(n, nv.involution(n, i)) == i);
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t i = 0; i < nv.level_size(n); ++i)
        for (std::size_t k = 0; k <= n; ++k)
          REQUIRE(nv.face(n, k, nv.involution(n, i)) ==
                  nv.involution(n - 1, nv.face(n, k, i)));
  }
}

TEST_CASE("fixed simplices have fixed faces") {
  Nerve nv = build_nerve(sample_groupoid("z4_inv"), 3);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 0; i < nv.level_size(n); ++i) {
      if (nv.involution(n, i) != i) continue;
      for (std::size_t k = 0; k <= n; ++k) {
        std::size_t f = nv.face(n, k, i);
        REQUIRE(nv.involution(n - 1, f) == f);
      }
    }
}

TEST_CASE("nerve refuses to exceed its level budget") {
  CHECK_THROWS_AS(build_nerve(sample_groupoid("z4"), 3, 10), BudgetExceeded);
  CHECK_THROWS_AS(build_nerve(sample_groupoid("pair2"), 1, 2), BudgetExceeded);
  CHECK_NOTHROW(build_nerve(sample_groupoid("z4"), 3, 64));
}
