#include "rcech/types_algebra.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>

namespace rcech {

namespace {

using Complex = std::complex<double>;

CMat identity(Eigen::Index n) { return CMat::Identity(n, n); }

CMat pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMat pauli_y() {
  CMat m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

CMat pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// The standard symplectic unit, squares to minus one.
CMat sym_j() {
  CMat m(2, 2);
  m << 0, -1, 1, 0;
  return m;
}

CMat unit_matrix(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  CMat m = CMat::Zero(n, n);
  m(i, j) = 1;
  return m;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("type model: " + msg);
}

// Homogeneity degree of m with respect to the grading: gamma m gamma is
// m or -m, anything else is rejected.
int parity_of(const CMat& gamma, const CMat& m, double thr, const std::string& what) {
  CMat t = gamma * m * gamma;
  double even = (t - m).norm();
  double odd = (t + m).norm();
  double scale = std::max(1.0, m.norm());
  require(std::min(even, odd) <= thr * scale && std::max(even, odd) >= 0.5 * scale,
          what + " is not homogeneous for the grading");
  return even <= odd ? 0 : 1;
}

// m must be a scalar matrix; returns the scalar.
Complex scalar_of(const CMat& m, double thr, const std::string& what) {
  Complex c = m.trace() / double(m.rows());
  require((m - c * identity(m.rows())).norm() <= thr * std::max(1.0, std::abs(c)),
          what + " is not a scalar matrix");
  return c;
}

int sign_of(Complex c, double thr, const std::string& what) {
  require(std::abs(c.imag()) <= thr && std::abs(c.real()) >= 0.5,
          what + " is not a definite sign");
  return c.real() > 0 ? +1 : -1;
}

CMat random_combination(const std::vector<CMat>& span, std::mt19937& rng) {
  std::normal_distribution<double> dist;
  CMat out = CMat::Zero(span[0].rows(), span[0].cols());
  for (const CMat& s : span) out += Complex(dist(rng), dist(rng)) * s;
  out /= out.norm();
  return out;
}

Eigen::VectorXcd vec(const CMat& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

// Real structure of the fold of two odd Clifford lines with the given
// signs: the two odd generators go to the first two Pauli matrices, and
// the unique implementer follows from which of them conjugation flips.
CMat fold_structure(int lambda_a, int lambda_b) {
  if (lambda_a > 0) return lambda_b > 0 ? pauli_x() : identity(2);
  return lambda_b > 0 ? pauli_z() : pauli_y();
}

// Koszul assembly of two graded cores: the second real structure picks up
// the second grading when the first real structure is odd.
void combine_cores(const CMat& ga, const CMat& ua, const CMat& gb, const CMat& ub, CMat* gamma,
                   CMat* u) {
  int du = parity_of(ga, ua, 1e-9, "first factor real structure");
  *gamma = kron(ga, gb);
  *u = du == 0 ? kron(ua, ub) : kron(ua, (ub * gb).eval());
}

}  // namespace

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

TypeModel reference_model(int type) {
  require(type >= 0 && type < 8, "type out of range");
  TypeModel m;
  switch (type) {
    case 0:
      m.gamma = pauli_z();
      m.U = identity(2);
      break;
    case 2:
      m.gamma = pauli_z();
      m.U = pauli_x();
      break;
    case 4:
      // Trivially graded quaternionic line: U U-bar = -1 on an even core.
      m.gamma = identity(2);
      m.U = sym_j();
      break;
    case 6:
      m.gamma = pauli_z();
      m.U = pauli_y();
      break;
    default: {
      // Odd types: the nearest even core below, tensored with one
      // Clifford line. Its sign distinguishes 1 from 7.
      TypeModel core = reference_model(type == 7 ? 0 : type - 1);
      m.gamma = core.gamma;
      m.U = core.U;
      m.odd = true;
      m.lambda = type == 7 ? -1 : +1;
      break;
    }
  }
  return m;
}

RealizedModel realize(const TypeModel& m) {
  const Eigen::Index n = m.gamma.rows();
  require(m.gamma.cols() == n && m.U.rows() == n && m.U.cols() == n,
          "core matrices must be square and of equal size");
  require((m.gamma * m.gamma - identity(n)).norm() <= 1e-9, "grading must square to one");
  require((m.U * m.U.adjoint() - identity(n)).norm() <= 1e-9, "real structure must be unitary");
  require(m.lambda == 1 || m.lambda == -1, "Clifford sign must be +-1");

  RealizedModel out;
  if (!m.odd) {
    out.gamma = m.gamma;
    out.U = m.U;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) out.algebra.push_back(unit_matrix(n, i, j));
    return out;
  }

  int du = parity_of(m.gamma, m.U, 1e-9, "core real structure");
  CMat u_cl = m.lambda > 0 ? identity(2) : pauli_z();
  if (du == 1) u_cl = (u_cl * pauli_z()).eval();
  out.gamma = kron(m.gamma, pauli_z());
  out.U = kron(m.U, u_cl);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      out.algebra.push_back(kron(unit_matrix(n, i, j), identity(2)));
      out.algebra.push_back(kron(unit_matrix(n, i, j), pauli_x()));
    }

  // The odd generator is gamma tensor the first Pauli matrix; conjugation
  // must fix it up to exactly the Clifford sign.
  CMat gen = kron(m.gamma, pauli_x());
  CMat image = out.U * gen.conjugate() * out.U.adjoint();
  if ((image - double(m.lambda) * gen).norm() > 1e-9)
    throw std::logic_error("type model: realized Clifford sign is off");
  return out;
}

TypeModel graded_tensor(const TypeModel& a, const TypeModel& b) {
  TypeModel out;
  combine_cores(a.gamma, a.U, b.gamma, b.U, &out.gamma, &out.U);
  if (!a.odd && !b.odd) return out;
  if (a.odd != b.odd) {
    out.odd = true;
    out.lambda = a.odd ? a.lambda : b.lambda;
    return out;
  }
  // Two Clifford lines fold into one two dimensional graded core.
  CMat folded_gamma, folded_u;
  combine_cores(out.gamma, out.U, pauli_z(), fold_structure(a.lambda, b.lambda), &folded_gamma,
                &folded_u);
  out.gamma = folded_gamma;
  out.U = folded_u;
  return out;
}

int classify_type(const RealizedModel& m, double tol) {
  const Eigen::Index n = m.gamma.rows();
  const double thr = tol * std::max<double>(1.0, double(n));
  require(n > 0 && m.gamma.cols() == n && m.U.rows() == n && m.U.cols() == n,
          "grading and real structure must be square and of equal size");
  require((m.gamma - m.gamma.adjoint()).norm() <= thr, "grading is not Hermitian");
  require((m.gamma * m.gamma - identity(n)).norm() <= thr, "grading does not square to one");
  require((m.U * m.U.adjoint() - identity(n)).norm() <= thr, "real structure is not unitary");
  Complex mu = scalar_of(m.U * m.U.conjugate(), thr, "square of the conjugation");
  int mu_sign = sign_of(mu, thr, "square of the conjugation");
  parity_of(m.gamma, m.U, thr, "real structure");

  const std::size_t mm = m.algebra.size();
  require(mm > 0 && mm <= std::size_t(n) * std::size_t(n), "algebra spanning set has a bad size");
  for (const CMat& s : m.algebra)
    require(s.rows() == n && s.cols() == n, "algebra element of the wrong size");

  CMat basis(n * n, mm);
  for (std::size_t k = 0; k < mm; ++k) basis.col(k) = vec(m.algebra[k]);
  CMat gram = basis.adjoint() * basis;
  Eigen::LDLT<CMat> gram_ldlt(gram);
  require(gram_ldlt.info() == Eigen::Success, "algebra spanning set is degenerate");
  {
    Eigen::VectorXd d = gram_ldlt.vectorD().real();
    require(d.minCoeff() > thr * thr * std::max(1.0, d.maxCoeff()),
            "algebra spanning set is linearly dependent");
  }

  auto phi = [&](const CMat& s) { return (m.U * s.conjugate() * m.U.adjoint()).eval(); };
  auto in_span = [&](const CMat& s) {
    Eigen::VectorXcd v = vec(s);
    Eigen::VectorXcd c = gram_ldlt.solve(basis.adjoint() * v);
    return (basis * c - v).norm() <= thr * std::max(1.0, v.norm());
  };
  std::mt19937 rng(0x5eedu);
  require(in_span(identity(n)), "algebra does not contain the identity");
  // Conjugation and grading must preserve the span: checked on random
  // elements, which witnesses a violation almost surely.
  for (std::size_t trial = 0; trial < std::min<std::size_t>(mm, 32); ++trial) {
    CMat s = random_combination(m.algebra, rng);
    require(in_span(phi(s)), "conjugation does not preserve the algebra");
    require(in_span(m.gamma * s * m.gamma), "grading does not preserve the algebra");
  }

  // Ungraded center, as the joint commutant of two random Hermitian
  // elements: the commutant of the first is spanned by its spectral
  // projections, commutation with the second cuts it down. The result
  // always contains the center, so once every candidate is confirmed
  // central and inside the span, it is the center.
  std::vector<CMat> center;
  bool confirmed = false;
  for (int attempt = 0; attempt < 3 && !confirmed; ++attempt) {
    CMat c1 = random_combination(m.algebra, rng);
    CMat r1 = c1 + c1.adjoint();
    Eigen::SelfAdjointEigenSolver<CMat> es1(r1);
    const Eigen::VectorXd& ev1 = es1.eigenvalues();
    double spread = std::max(1.0, ev1(n - 1) - ev1(0));
    bool distinct = true;
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      if (ev1(i + 1) - ev1(i) < 1e-6 * spread) distinct = false;
    if (!distinct) continue;
    CMat c2 = random_combination(m.algebra, rng);
    CMat r2 = c2 + c2.adjoint();
    CMat cut(n * n, n);
    std::vector<CMat> projections;
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::VectorXcd vi = es1.eigenvectors().col(i);
      projections.push_back(vi * vi.adjoint());
      cut.col(i) = vec(projections.back() * r2 - r2 * projections.back());
    }
    Eigen::JacobiSVD<CMat> svd(cut, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    center.clear();
    confirmed = true;
    for (Eigen::Index l = 0; l < n; ++l) {
      if (sv(l) > thr * std::max(1.0, sv(0))) continue;
      CMat x = CMat::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i) x += svd.matrixV()(i, l) * projections[i];
      x /= x.norm();
      for (const CMat& s : m.algebra)
        if ((x * s - s * x).norm() > thr * std::max(1.0, s.norm())) {
          confirmed = false;
          break;
        }
      if (!confirmed || !in_span(x)) {
        confirmed = false;
        break;
      }
      center.push_back(x);
    }
  }
  require(confirmed, "center computation did not stabilize");
  require(center.size() == 1 || center.size() == 2, "center dimension is not one or two");

  if (center.size() == 1) {
    // Even type: the algebra must be everything, and the implementer of
    // the conjugation is reconstructed from its action on matrix units.
    require(mm == std::size_t(n) * std::size_t(n), "one dimensional center but a small algebra");
    CMat a0 = phi(unit_matrix(n, 0, 0));
    std::normal_distribution<double> dist;
    Eigen::VectorXcd w;
    double a0_scale = a0.norm();
    do {
      Eigen::VectorXcd r(n);
      for (Eigen::Index i = 0; i < n; ++i) r(i) = Complex(dist(rng), dist(rng));
      w = a0 * r;
    } while (w.norm() < 0.1 * a0_scale);
    CMat y(n, n);
    for (Eigen::Index j = 0; j < n; ++j) y.col(j) = phi(unit_matrix(n, j, 0)) * w;
    Eigen::FullPivLU<CMat> ylu(y);
    ylu.setThreshold(thr);
    require(ylu.isInvertible(), "implementer reconstruction is singular");
    y *= std::sqrt(double(n)) / y.norm();
    for (int trial = 0; trial < 3; ++trial) {
      CMat s = random_combination(m.algebra, rng);
      require((phi(s) * y - y * s.conjugate()).norm() <= thr * 10,
              "reconstructed implementer does not implement the conjugation");
    }
    int eps = parity_of(m.gamma, y, thr * 10, "implementer");
    Complex nu = scalar_of(y * y.conjugate(), thr * 10, "implementer times its conjugate");
    int eta = sign_of(nu, thr * 10, "implementer times its conjugate");
    if (eta != mu_sign)
      throw std::logic_error("type model: implementer sign disagrees with the given structure");
    if (eps == 0) return eta > 0 ? 0 : 4;
    return eta > 0 ? 2 : 6;
  }

  // Odd type: pull a Hermitian traceless central element, normalize it to
  // the difference of the two central idempotents.
  CMat best = CMat::Zero(n, n);
  for (const CMat& x0 : center) {
    CMat x = x0 - (x0.trace() / double(n)) * identity(n);
    if (x.norm() > best.norm()) best = x;
  }
  require(best.norm() > thr, "center has no traceless part");
  CMat h1 = best + best.adjoint();
  CMat h2 = Complex(0, 1) * (best - best.adjoint());
  CMat h = h1.norm() >= h2.norm() ? h1 : h2;
  require(h.norm() >= 0.5 * best.norm(), "no Hermitian central element");
  h /= h.norm();
  for (const CMat& s : m.algebra)
    require((h * s - s * h).norm() <= thr * std::max(1.0, s.norm()),
            "central candidate fails to be central");

  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  double lo = ev(0), hi = ev(n - 1);
  require(hi - lo >= 1.0 / std::sqrt(double(n)), "central element eigenvalues do not separate");
  for (Eigen::Index i = 0; i < n; ++i)
    require(std::min(ev(i) - lo, hi - ev(i)) <= thr * 10,
            "central element eigenvalues form more than two clusters");
  CMat w = (2.0 * h - (hi + lo) * identity(n)) / (hi - lo);
  require((w * w - identity(n)).norm() <= thr * 10, "idempotent difference does not square to one");
  require(in_span(w), "idempotent difference escapes the algebra");
  require(parity_of(m.gamma, w, thr * 10, "idempotent difference") == 1,
          "idempotent difference must be odd");

  CMat image = phi(w);
  double fix = (image - w).norm();
  double swap = (image + w).norm();
  require(std::min(fix, swap) <= thr * 10 && std::max(fix, swap) >= 0.5,
          "conjugation neither fixes nor swaps the central idempotents");
  int i_inv = fix <= swap ? 0 : 1;

  int eps;
  if (i_inv == 0) {
    eps = mu_sign;
  } else {
    CMat k = m.U * m.gamma.conjugate();
    Complex nu = scalar_of(k * k.conjugate(), thr * 10, "square of the twisted conjugation");
    eps = sign_of(nu, thr * 10, "square of the twisted conjugation");
  }
  if (i_inv == 0) return eps > 0 ? 1 : 5;
  return eps > 0 ? 7 : 3;
}

}  // namespace rcech
