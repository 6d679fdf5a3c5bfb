#include "rcech/zlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rcech {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat::operator*: shape mismatch");
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Int& y = o(k, j);
        if (y != 0) r(i, j) += x * y;
      }
    }
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

IntMat IntMat::transposed() const {
  IntMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMat::set_col(std::size_t j, const IntVec& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMat IntMat::hstack(const IntMat& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
  IntMat r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

IntMat IntMat::vstack(const IntMat& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
  IntMat r(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
  return r;
}

IntMat IntMat::select_cols(const std::vector<std::size_t>& idx) const {
  IntMat r(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
  return r;
}

IntVec IntMat::apply(const IntVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  IntVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && x[j] != 0) s += (*this)(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

IntMat block_diag(const IntMat& a, const IntMat& b) {
  IntMat r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

std::vector<Int> SmithForm::diag() const {
  std::vector<Int> r;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) r.push_back(d(i, i));
  return r;
}

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[a] += q * row[b]
void add_row(IntMat& m, std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += q * m(b, j);
}

void add_col(IntMat& m, std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += q * m(i, b);
}

void negate_row(IntMat& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

SmithForm smith_normal_form(IntMat a) {
  const std::size_t r = a.rows(), c = a.cols();
  SmithForm s{IntMat::identity(r), std::move(a), IntMat::identity(c)};
  IntMat& d = s.d;

  const std::size_t k = std::min(r, c);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      std::size_t pi = t, pj = t;
      bool found = false;
      Int best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (d(i, j) == 0) continue;
          Int m = abs(d(i, j));
          if (!found || m < best) {
            found = true;
            best = m;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        // Trailing block is zero; diagonalization done.
        t = k;
        break;
      }
      swap_rows(d, t, pi);
      swap_rows(s.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);

      // Clear the pivot row and column. If a remainder survives, it is
      // strictly smaller than the pivot, so the outer loop terminates.
      bool exact = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d(i, t) != 0) exact = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d(t, j) != 0) exact = false;
      }
      if (!exact) continue;

      bool row_clear = true, col_clear = true;
      for (std::size_t i = t + 1; i < r && row_clear; ++i) row_clear = d(i, t) == 0;
      for (std::size_t j = t + 1; j < c && col_clear; ++j) col_clear = d(t, j) == 0;
      if (!row_clear || !col_clear) continue;

      // Enforce divisibility into the trailing block: drag a bad row up.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(s.u, t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (t == k) break;
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) {
      negate_row(d, i);
      negate_row(s.u, i);
    }
  }
  return s;
}

IntMat kernel_basis(const IntMat& a) {
  const std::size_t c = a.cols();
  SmithForm s = smith_normal_form(a);
  std::vector<std::size_t> free_cols;
  const std::size_t k = std::min(a.rows(), c);
  for (std::size_t j = 0; j < c; ++j)
    if (j >= k || s.d(j, j) == 0) free_cols.push_back(j);
  return s.v.select_cols(free_cols);
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: size mismatch");
  SmithForm s = smith_normal_form(a);
  IntVec ub = s.u.apply(b);
  const std::size_t k = std::min(a.rows(), a.cols());
  IntVec y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < k && s.d(i, i) != 0) {
      if (ub[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

bool in_column_lattice(const IntMat& a, const IntVec& b) {
  return solve_integer(a, b).has_value();
}

std::optional<IntVec> solve_modulo_lattice(const IntMat& a, const IntMat& l, const IntVec& b) {
  auto full = solve_integer(a.hstack(l), b);
  if (!full) return std::nullopt;
  return IntVec(full->begin(), full->begin() + a.cols());
}

Int AbelianInvariants::order() const {
  if (rank != 0) throw std::logic_error("order(): infinite group");
  Int n = 1;
  for (const Int& t : torsion) n *= t;
  return n;
}

Int AbelianInvariants::exponent() const {
  return torsion.empty() ? Int(1) : torsion.back();
}

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (rank == 1) append("Z");
  if (rank >= 2) append("Z^" + std::to_string(rank));
  for (const Int& t : torsion) append("Z/" + t.str());
  return out;
}

AbelianInvariants quotient_invariants(std::size_t ngens, const IntMat& relations) {
  if (relations.rows() != ngens) throw std::invalid_argument("quotient_invariants: shape mismatch");
  SmithForm s = smith_normal_form(relations);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const Int& d : s.diag()) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.rank = static_cast<long long>(ngens - nonzero);
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b) {
  // Re-diagonalize the combined torsion to restore the divisor chain.
  std::size_t n = a.torsion.size() + b.torsion.size();
  IntMat rel(n, n);
  std::size_t i = 0;
  for (const Int& t : a.torsion) rel(i, i) = t, ++i;
  for (const Int& t : b.torsion) rel(i, i) = t, ++i;
  AbelianInvariants r = quotient_invariants(n, rel);
  r.rank = a.rank + b.rank;
  return r;
}

AbelianInvariants invariants_from_order_counts(const Int& order,
                                               const std::function<Int(const Int&)>& killed) {
  AbelianInvariants result;
  std::vector<Int> primes;
  {
    Int rest = order;
    for (Int p = 2; p * p <= rest; ++p)
      if (rest % p == 0) {
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
      }
    if (rest > 1) primes.push_back(rest);
  }
  for (const Int& p : primes) {
    // f(j) = log_p of the number of elements killed by p^j.
    Int prev = 1;
    Int pj = 1;
    std::vector<long long> f = {0};
    while (true) {
      pj *= p;
      Int count = killed(pj);
      long long logv = 0;
      Int t = count;
      while (t > 1) {
        if (t % p != 0)
          throw std::logic_error("order counts: kill count is not a power of the prime");
        t /= p;
        ++logv;
      }
      f.push_back(logv);
      if (count == prev) break;
      prev = count;
    }
    // Number of cyclic factors with exponent >= j is f(j) - f(j-1).
    for (std::size_t j = 1; j + 1 < f.size(); ++j) {
      long long with_j = (f[j] - f[j - 1]) - (f[j + 1] - f[j]);
      Int pw = 1;
      for (std::size_t i = 0; i < j; ++i) pw *= p;
      for (long long c = 0; c < with_j; ++c) {
        AbelianInvariants cyc;
        cyc.torsion = {pw};
        result = direct_sum(result, cyc);
      }
    }
  }
  return result;
}

IntMat block_diag(const std::vector<IntMat>& blocks) {
  IntMat out(0, 0);
  for (const IntMat& b : blocks) out = block_diag(out, b);
  return out;
}

IntMat lattice_basis(const IntMat& gens) {
  if (gens.cols() == 0) return IntMat(gens.rows(), 0);
  SmithForm s = smith_normal_form(gens);
  // gens = U^{-1} D V^{-1}; the column lattice is spanned by U^{-1} * (d_i e_i).
  auto uinv_col = [&](std::size_t i) {
    IntVec e(s.u.rows());
    e[i] = 1;
    return *solve_integer(s.u, e);  // U is unimodular
  };
  std::vector<IntVec> cols;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
    if (s.d(i, i) == 0) continue;
    IntVec c = uinv_col(i);
    for (auto& x : c) x *= s.d(i, i);
    cols.push_back(std::move(c));
  }
  IntMat b(gens.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    // normalize sign by leading nonzero entry
    const IntVec& c = cols[j];
    bool flip = false;
    for (const Int& x : c)
      if (x != 0) {
        flip = x < 0;
        break;
      }
    for (std::size_t i = 0; i < gens.rows(); ++i) b(i, j) = flip ? -c[i] : c[i];
  }
  return b;
}

namespace {

Int positive_mod(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

ClassGroup::ClassGroup(std::size_t ngens, const IntMat& relations) : ngens_(ngens) {
  if (relations.rows() != ngens) throw std::invalid_argument("ClassGroup: shape mismatch");
  SmithForm s = smith_normal_form(relations);
  u_ = s.u;
  // U is unimodular, so its own normal form is the identity and the
  // inverse is the product of the outer factors.
  SmithForm su = smith_normal_form(u_);
  u_inv_ = su.v * su.u;

  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < ngens; ++i) {
    Int d = (i < std::min(s.d.rows(), s.d.cols())) ? s.d(i, i) : Int(0);
    if (d == 1) continue;  // trivial factor
    if (d == 0) {
      free_rows.push_back(i);
    } else {
      factor_row_.push_back(i);
      factor_order_.push_back(d);
      inv_.torsion.push_back(d);
    }
  }
  for (std::size_t i : free_rows) {
    factor_row_.push_back(i);
    factor_order_.push_back(0);
  }
  inv_.rank = static_cast<long long>(free_rows.size());
}

IntVec ClassGroup::coordinates(const IntVec& gen_coords) const {
  if (gen_coords.size() != ngens_) throw std::invalid_argument("ClassGroup: wrong vector length");
  IntVec y = u_.apply(gen_coords);
  IntVec out(num_factors());
  for (std::size_t f = 0; f < num_factors(); ++f)
    out[f] = factor_order_[f] == 0 ? y[factor_row_[f]] : positive_mod(y[factor_row_[f]], factor_order_[f]);
  return out;
}

IntVec ClassGroup::lift(const IntVec& factor_coords) const {
  if (factor_coords.size() != num_factors())
    throw std::invalid_argument("ClassGroup: wrong coordinate length");
  IntVec y(ngens_, 0);
  for (std::size_t f = 0; f < num_factors(); ++f) y[factor_row_[f]] = factor_coords[f];
  return u_inv_.apply(y);
}

}  // namespace rcech
