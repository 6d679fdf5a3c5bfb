#pragma once

#include <Eigen/Dense>
#include <vector>

namespace rcech {

using CMat = Eigen::MatrixXcd;

CMat kron(const CMat& a, const CMat& b);

// Structured model of a Real graded elementary algebra: a full graded
// matrix core carrying the grading gamma (Hermitian, squares to one) and
// the real structure x -> U conj(x) U^{-1} (U unitary, U conj(U) = +-1),
// optionally tensored with the rank one Clifford algebra whose odd
// generator the real structure fixes up to the sign lambda.
struct TypeModel {
  CMat gamma;
  CMat U;
  bool odd = false;
  int lambda = +1;
};

// The model spelled out on its total space: a spanning set of the
// algebra, the total grading, the total real structure.
struct RealizedModel {
  std::vector<CMat> algebra;
  CMat gamma;
  CMat U;
};

// Pinned representative of each of the eight types.
TypeModel reference_model(int type);

RealizedModel realize(const TypeModel& m);

// Graded tensor product. Assembling the real structures costs a factor of
// the first grading when the second real structure is odd; two odd
// Clifford factors fold into a two dimensional graded core whose real
// structure depends on the two signs.
TypeModel graded_tensor(const TypeModel& a, const TypeModel& b);

// Reads the type (0..7) off the matrices alone. Parity is the dimension
// of the ungraded center minus one. Even types: solve for an implementer
// X of the real structure from its action on matrix units, then take the
// homogeneity degree of X and the sign of X conj(X). Odd types: whether
// the real structure fixes or swaps the two central idempotents, and the
// sign of the square of the antiunitary that survives on one block.
// Throws std::invalid_argument when the matrices fail the model axioms
// or a decision quantity is smaller than 0.5.
int classify_type(const RealizedModel& m, double tol = 1e-6);

}  // namespace rcech
