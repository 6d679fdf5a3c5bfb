#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rcech {

// Arbitrary-precision integer used for all exact linear algebra.
using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense matrix over Int, row-major. Sized for complexes with a few
// thousand cells per level; no sparse storage needed at that scale.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMat& o) const = default;

  IntMat operator*(const IntMat& o) const;
  IntMat operator-() const;

  IntMat transposed() const;
  IntVec col(std::size_t j) const;
  void set_col(std::size_t j, const IntVec& v);
  bool is_zero() const;

  // [ *this | o ] side by side; row counts must match.
  IntMat hstack(const IntMat& o) const;
  // *this on top of o; column counts must match.
  IntMat vstack(const IntMat& o) const;
  // Keep only the listed columns, in order.
  IntMat select_cols(const std::vector<std::size_t>& idx) const;

  IntVec apply(const IntVec& x) const;  // matrix * vector

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMat block_diag(const IntMat& a, const IntMat& b);
IntMat block_diag(const std::vector<IntMat>& blocks);

// Independent columns spanning the same lattice as the input columns,
// leading entries positive.
IntMat lattice_basis(const IntMat& gens);

// U * A * V == D with U, V unimodular and D diagonal,
// d1 | d2 | ... | dk, all diagonal entries >= 0.
struct SmithForm {
  IntMat u, d, v;
  std::vector<Int> diag() const;
};

SmithForm smith_normal_form(IntMat a);

// Basis of { x : A x = 0 } as matrix columns.
IntMat kernel_basis(const IntMat& a);

// One integer solution of A x = b, if any.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

// Is b in the lattice spanned by the columns of A?
bool in_column_lattice(const IntMat& a, const IntVec& b);

// Solves A x + L y = b and returns the x part. Used for expressing a
// value in subgroup generators A modulo the relation lattice L.
std::optional<IntVec> solve_modulo_lattice(const IntMat& a, const IntMat& l, const IntVec& b);

// Isomorphism class of a finitely generated abelian group:
// Z^rank + Z/t1 + ... + Z/tk with t1 | t2 | ... , all ti >= 2.
struct AbelianInvariants {
  long long rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool finite() const { return rank == 0; }
  Int order() const;  // throws if infinite
  Int exponent() const;
  bool operator==(const AbelianInvariants& o) const = default;

  // "0", "Z", "Z^2 + Z/2 + Z/4", ... (additive notation)
  std::string to_string() const;
};

// Invariants of Z^ngens / (column lattice of relations).
AbelianInvariants quotient_invariants(std::size_t ngens, const IntMat& relations);

// Direct sum, renormalized to a divisor chain.
AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b);

// Isomorphism class of a finite abelian group from its order and a counter
// of the elements x with k*x = 0 (the counts for prime powers k pin down
// the cyclic factors).
AbelianInvariants invariants_from_order_counts(const Int& order,
                                               const std::function<Int(const Int&)>& killed);

// Finitely generated abelian group Z^ngens / (columns of relations), with
// canonical coordinates. Factors are listed torsion first (orders in a
// divisor chain), then the free factors; coordinates(x) reduces a vector in
// the generator basis to one coordinate per factor, lift goes back.
class ClassGroup {
 public:
  ClassGroup() = default;
  ClassGroup(std::size_t ngens, const IntMat& relations);

  const AbelianInvariants& invariants() const { return inv_; }
  std::size_t num_factors() const { return factor_order_.size(); }
  // 0 for a free factor, the cyclic order otherwise.
  const Int& factor_order(std::size_t f) const { return factor_order_[f]; }

  IntVec coordinates(const IntVec& gen_coords) const;
  IntVec lift(const IntVec& factor_coords) const;  // a representative in Z^ngens

 private:
  std::size_t ngens_ = 0;
  IntMat u_, u_inv_;                  // change of basis diagonalizing the relations
  std::vector<std::size_t> factor_row_;
  std::vector<Int> factor_order_;
  AbelianInvariants inv_;
};

}  // namespace rcech
