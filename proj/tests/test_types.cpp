#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rcech/types_algebra.hpp"

using namespace rcech;

namespace {

int type_of(const TypeModel& m) { return classify_type(realize(m)); }

// Random unitary commuting with a diagonal +-1 grading.
CMat random_even_unitary(const CMat& gamma, std::mt19937& rng) {
  const Eigen::Index n = gamma.rows();
  std::vector<Eigen::Index> plus, minus;
  for (Eigen::Index i = 0; i < n; ++i)
    (gamma(i, i).real() > 0 ? plus : minus).push_back(i);
  std::normal_distribution<double> dist;
  CMat v = CMat::Zero(n, n);
  for (const std::vector<Eigen::Index>* block : {&plus, &minus}) {
    const Eigen::Index b = Eigen::Index(block->size());
    if (b == 0) continue;
    CMat g(b, b);
    for (Eigen::Index i = 0; i < b; ++i)
      for (Eigen::Index j = 0; j < b; ++j) g(i, j) = std::complex<double>(dist(rng), dist(rng));
    CMat q = Eigen::HouseholderQR<CMat>(g).householderQ();
    for (Eigen::Index i = 0; i < b; ++i)
      for (Eigen::Index j = 0; j < b; ++j) v((*block)[i], (*block)[j]) = q(i, j);
  }
  return v;
}

RealizedModel conjugated(const RealizedModel& m, const CMat& v) {
  RealizedModel out;
  out.gamma = v * m.gamma * v.adjoint();
  out.U = v * m.U * v.transpose();
  for (const CMat& s : m.algebra) out.algebra.push_back(v * s * v.adjoint());
  return out;
}

}  // namespace

TEST_CASE("kronecker product lays out blocks by the first factor") {
  CMat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  CMat k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == std::complex<double>(1));
  CHECK(k(0, 3) == std::complex<double>(2));
  CHECK(k(2, 1) == std::complex<double>(3));
  CHECK(k(3, 2) == std::complex<double>(4));
  CHECK(k(0, 0) == std::complex<double>(0));
}

TEST_CASE("the eight reference models classify to their own types") {
  for (int t = 0; t < 8; ++t) {
    INFO("type " << t);
    CHECK(type_of(reference_model(t)) == t);
  }
}

TEST_CASE("graded tensor products add types modulo eight") {
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t) {
      INFO("types " << s << " and " << t);
      CHECK(type_of(graded_tensor(reference_model(s), reference_model(t))) == (s + t) % 8);
    }
}

TEST_CASE("type of a triple product does not depend on bracketing") {
  auto bracket_left = [](int a, int b, int c) {
    return type_of(graded_tensor(graded_tensor(reference_model(a), reference_model(b)),
                                 reference_model(c)));
  };
  auto bracket_right = [](int a, int b, int c) {
    return type_of(graded_tensor(reference_model(a),
                                 graded_tensor(reference_model(b), reference_model(c))));
  };
  CHECK(bracket_left(1, 1, 1) == 3);
  CHECK(bracket_right(1, 1, 1) == 3);
  CHECK(bracket_left(2, 7, 7) == 0);
  CHECK(bracket_right(2, 7, 7) == 0);
  CHECK(bracket_left(7, 1, 2) == 2);
  CHECK(bracket_right(7, 1, 2) == 2);
}

TEST_CASE("classification is invariant under even unitary conjugation") {
  std::mt19937 rng(20240813u);
  for (int t = 0; t < 8; ++t) {
    RealizedModel m = realize(reference_model(t));
    for (int trial = 0; trial < 3; ++trial) {
      CMat v = random_even_unitary(m.gamma, rng);
      INFO("type " << t << " trial " << trial);
      CHECK(classify_type(conjugated(m, v)) == t);
    }
  }
}

TEST_CASE("malformed models are rejected") {
  RealizedModel good = realize(reference_model(2));

  RealizedModel bad = good;
  bad.U *= 2.0;  // not unitary
  CHECK_THROWS_AS(classify_type(bad), std::invalid_argument);

  bad = good;
  bad.U.setZero();
  bad.U(0, 0) = bad.U(0, 1) = bad.U(1, 0) = 1.0 / std::sqrt(2.0);
  bad.U(1, 1) = -1.0 / std::sqrt(2.0);  // unitary but not homogeneous
  CHECK_THROWS_AS(classify_type(bad), std::invalid_argument);

  bad = good;
  bad.U.setZero();
  bad.U(0, 1) = 1;
  bad.U(1, 0) = std::complex<double>(0, 1);  // U conj(U) is not a scalar
  CHECK_THROWS_AS(classify_type(bad), std::invalid_argument);

  bad = good;
  bad.algebra = {bad.algebra[1]};  // span without the identity
  CHECK_THROWS_AS(classify_type(bad), std::invalid_argument);

  bad = good;
  bad.algebra.push_back(CMat::Zero(3, 3));  // wrong size
  CHECK_THROWS_AS(classify_type(bad), std::invalid_argument);

  CHECK_THROWS_AS(reference_model(8), std::invalid_argument);
}
