#include "rcech/abelian.hpp"

#include <stdexcept>

namespace rcech {

bool RealCoefficient::is_finite() const {
  for (const Int& m : orders)
    if (m == 0) return false;
  return true;
}

Int RealCoefficient::order() const {
  Int n = 1;
  for (const Int& m : orders) {
    if (m == 0) throw std::logic_error("order(): infinite coefficient group");
    n *= m;
  }
  return n;
}

bool RealCoefficient::trivial_involution() const {
  IntMat diff = involution;
  for (std::size_t i = 0; i < ngens(); ++i) diff(i, i) -= 1;
  IntMat rel = relation_matrix();
  for (std::size_t j = 0; j < ngens(); ++j)
    if (!in_column_lattice(rel, diff.col(j))) return false;
  return true;
}

IntMat RealCoefficient::relation_matrix() const {
  std::size_t k = 0;
  for (const Int& m : orders)
    if (m != 0) ++k;
  IntMat rel(ngens(), k);
  std::size_t j = 0;
  for (std::size_t i = 0; i < ngens(); ++i)
    if (orders[i] != 0) rel(i, j++) = orders[i];
  return rel;
}

IntVec RealCoefficient::reduce(IntVec x) const {
  if (x.size() != ngens()) throw std::invalid_argument("coefficient coordinate size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (orders[i] == 0) continue;
    x[i] %= orders[i];
    if (x[i] < 0) x[i] += orders[i];
  }
  return x;
}

IntVec RealCoefficient::involve(const IntVec& x) const { return reduce(involution.apply(x)); }

IntVec RealCoefficient::add(const IntVec& x, const IntVec& y) const {
  IntVec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return reduce(std::move(r));
}

IntVec RealCoefficient::sub(const IntVec& x, const IntVec& y) const {
  IntVec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return reduce(std::move(r));
}

IntVec RealCoefficient::negate(const IntVec& x) const {
  IntVec r(x);
  for (auto& c : r) c = -c;
  return reduce(std::move(r));
}

bool RealCoefficient::equal(const IntVec& x, const IntVec& y) const {
  return reduce(x) == reduce(y);
}

bool RealCoefficient::is_zero(const IntVec& x) const {
  IntVec r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](const Int& c) { return c == 0; });
}

std::vector<IntVec> RealCoefficient::elements() const {
  if (!is_finite()) throw std::logic_error("elements(): infinite coefficient group");
  std::vector<IntVec> out;
  IntVec cur(ngens());
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < ngens(); ++i) {
      cur[i] += 1;
      if (cur[i] < orders[i]) break;
      cur[i] = 0;
    }
    if (i == ngens()) break;
  }
  return out;
}

void RealCoefficient::validate() const {
  if (circle) return;
  const std::size_t n = ngens();
  if (involution.rows() != n || involution.cols() != n)
    throw std::invalid_argument("involution matrix shape does not match generator count");
  for (const Int& m : orders)
    if (m < 0 || m == 1)
      throw std::invalid_argument("factor orders must be 0 (infinite) or >= 2");

  IntMat rel = relation_matrix();
  // sigma preserves the relation lattice
  for (std::size_t j = 0; j < rel.cols(); ++j)
    if (!in_column_lattice(rel, involution.apply(rel.col(j))))
      throw std::invalid_argument("involution does not preserve the relation lattice");
  // sigma^2 = id modulo relations
  IntMat sq = involution * involution;
  for (std::size_t i = 0; i < n; ++i) sq(i, i) -= 1;
  for (std::size_t j = 0; j < n; ++j)
    if (!in_column_lattice(rel, sq.col(j)))
      throw std::invalid_argument("involution is not involutive modulo relations");
}

FixedSubgroup fixed_subgroup(const RealCoefficient& a) {
  const std::size_t n = a.ngens();
  IntMat diff = a.involution;
  for (std::size_t i = 0; i < n; ++i) diff(i, i) -= 1;
  IntMat rel = a.relation_matrix();

  // x is fixed iff (sigma - 1) x lies in the relation lattice.
  IntMat combined = diff.hstack(-rel);
  IntMat ker = kernel_basis(combined);
  IntMat proj(n, ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) proj(i, j) = ker(i, j);

  // The relation lattice itself consists of fixed representatives.
  IntMat gens = lattice_basis(proj.hstack(rel));

  // Relations among the generators: u with gens*u inside the lattice.
  IntMat relsys = gens.hstack(-rel);
  IntMat ker2 = kernel_basis(relsys);
  IntMat relations(gens.cols(), ker2.cols());
  for (std::size_t j = 0; j < ker2.cols(); ++j)
    for (std::size_t i = 0; i < gens.cols(); ++i) relations(i, j) = ker2(i, j);

  FixedSubgroup f{gens, relations, quotient_invariants(gens.cols(), relations)};
  return f;
}

AbelianInvariants coefficient_invariants(const RealCoefficient& a) {
  return quotient_invariants(a.ngens(), a.relation_matrix());
}

RealCoefficient underlying_group(const RealCoefficient& a) {
  RealCoefficient u = a;
  u.involution = IntMat::identity(a.ngens());
  u.name = a.name + " (underlying)";
  return u;
}

RealCoefficient coeff_Z(int sign) {
  RealCoefficient a;
  a.name = sign == 1 ? "Z" : "Z(0,1)";
  a.orders = {0};
  a.involution = IntMat(1, 1);
  a.involution(0, 0) = sign;
  return a;
}

RealCoefficient coeff_Zm(const Int& m, int sign) {
  RealCoefficient a;
  a.name = sign == 1 ? "Z" + m.str() : "Zm(" + m.str() + ",-1)";
  a.orders = {m};
  a.involution = IntMat(1, 1);
  a.involution(0, 0) = sign;
  return a;
}

RealCoefficient coeff_circle() {
  RealCoefficient a;
  a.name = "S1";
  a.circle = true;
  return a;
}

RealCoefficient coeff_custom(std::vector<Int> orders, IntMat involution, std::string name) {
  RealCoefficient a;
  a.orders = std::move(orders);
  a.involution = std::move(involution);
  a.name = std::move(name);
  a.validate();
  return a;
}

RealCoefficient parse_coefficient(const std::string& literal) {
  if (literal == "S1") return coeff_circle();
  if (literal == "Z") return coeff_Z(1);
  if (literal == "Z(0,1)") return coeff_Z(-1);
  auto parse_m = [&](const std::string& body) {
    if (body.empty()) throw std::invalid_argument("bad coefficient literal: " + literal);
    for (char c : body)
      if (!isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad coefficient literal: " + literal);
    Int m(body);
    if (m < 2) throw std::invalid_argument("cyclic order must be >= 2 in: " + literal);
    return m;
  };
  if (literal.rfind("Zm(", 0) == 0 && literal.back() == ')') {
    std::string body = literal.substr(3, literal.size() - 4);
    auto comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad coefficient literal: " + literal);
    Int m = parse_m(body.substr(0, comma));
    std::string s = body.substr(comma + 1);
    if (s == "+1") return coeff_Zm(m, 1);
    if (s == "-1") return coeff_Zm(m, -1);
    throw std::invalid_argument("involution sign must be +1 or -1 in: " + literal);
  }
  if (literal.size() > 1 && literal[0] == 'Z') {
    RealCoefficient a = coeff_Zm(parse_m(literal.substr(1)), 1);
    a.name = literal;
    return a;
  }
  throw std::invalid_argument("unknown coefficient literal: " + literal);
}

}  // namespace rcech
