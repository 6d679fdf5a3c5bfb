#include "rcech/extensions.hpp"

#include <stdexcept>

#include "rcech/budget.hpp"

namespace rcech {

namespace {

Int positive_mod(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

ExtGroup::ExtGroup(const Nerve& nv) {
  if (nv.max_level < 3)
    throw std::invalid_argument("ext group: the nerve must reach level three");
  RealCoefficient z2 = coeff_Zm(2, +1);
  grading_ = real_cohomology(nv, 1, z2);
  twist_ = circle_cohomology(nv, 2);
  for (std::size_t f = 0; f < grading_.classes.num_factors(); ++f)
    if (grading_.classes.factor_order(f) != 2)
      throw std::logic_error("ext group: grading part is not exponent two");

  num_torsion_ = twist_.homology.invariants().torsion.size();
  for (std::size_t f = 0; f < num_torsion_; ++f) {
    IntVec unit(twist_.homology.num_factors(), 0);
    unit[f] = 1;
    torsion_cycles_.push_back(twist_.cycle_basis.apply(twist_.homology.lift(unit)));
  }

  // Twist cocycle of the group law: basis gradings cupped in pairs, pushed
  // into the circle (value 1 becomes 1/2) and paired with the homology.
  const std::size_t m = grading_.classes.num_factors();
  std::vector<ValueTable> rep_tables;
  for (std::size_t i = 0; i < m; ++i) {
    IntVec unit(m, 0);
    unit[i] = 1;
    rep_tables.push_back(values_from_coords(nv, z2, grading_.space, grading_.representative(unit)));
  }
  pairing_.assign(m, std::vector<IntVec>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ValueTable cup = cup_product_11(nv, rep_tables[i], rep_tables[j]);
      std::vector<int> halves(cup.values.size());
      for (std::size_t s = 0; s < cup.values.size(); ++s)
        halves[s] = static_cast<int>(positive_mod(cup.values[s][0], 2));
      pairing_[i][j] = twist_class_of_halves(halves);
    }
}

IntVec ExtGroup::twist_class_of_halves(const std::vector<int>& halves) const {
  if (halves.size() != twist_.orbits.orbit_of.size())
    throw std::invalid_argument("twist class: one value per two simplex required");
  const std::vector<Int>& orders = twist_.homology.invariants().torsion;
  IntVec out(num_torsion_, 0);
  for (std::size_t f = 0; f < num_torsion_; ++f) {
    Int sum = 0;
    const IntVec& z = torsion_cycles_[f];
    for (std::size_t o = 0; o < z.size(); ++o)
      sum += z[o] * halves[twist_.orbits.rep[o]];
    Int h = positive_mod(sum, 2);
    if (h == 0) continue;
    if (orders[f] % 2 != 0)
      throw std::logic_error("twist class: a half landed on an odd order factor");
    out[f] = orders[f] / 2;
  }
  return out;
}

IntVec ExtGroup::twist_class(const std::vector<Int>& numerators, const Int& den) const {
  if (numerators.size() != twist_.orbits.orbit_of.size())
    throw std::invalid_argument("twist class: one value per two simplex required");
  if (den <= 0) throw std::invalid_argument("twist class: denominator must be positive");
  const std::vector<Int>& orders = twist_.homology.invariants().torsion;
  IntVec out(num_torsion_, 0);
  for (std::size_t f = 0; f < num_torsion_; ++f) {
    Int sum = 0;
    const IntVec& z = torsion_cycles_[f];
    for (std::size_t o = 0; o < z.size(); ++o)
      sum += z[o] * numerators[twist_.orbits.rep[o]];
    // Pairing value sum/den against a cycle of order orders[f]; the class
    // coordinate is that value times the order, which a cocycle makes whole.
    Int scaled = sum * orders[f];
    if (scaled % den != 0)
      throw std::invalid_argument("twist class: values do not pair integrally with a torsion cycle");
    out[f] = positive_mod(scaled / den, orders[f]);
  }
  return out;
}

ExtElement ExtGroup::element_from_cochains(const Nerve& nv, const ValueTable& delta,
                                           const std::vector<Int>& omega_numerators,
                                           const Int& den) const {
  RealCoefficient z2 = coeff_Zm(2, +1);
  std::string why;
  if (delta.level != 1 || !is_real_table(nv, z2, delta, &why))
    throw std::invalid_argument("grading cochain: " + (delta.level != 1
        ? std::string("level 1 required") : why));
  ExtElement out = zero();
  out.grading = grading_.class_of(coords_from_values(nv, z2, grading_.space, delta));
  out.twist_num = twist_class(omega_numerators, den);
  return out;
}

ExtElement ExtGroup::zero() const {
  return ExtElement{IntVec(grading_.classes.num_factors(), 0), IntVec(num_torsion_, 0)};
}

ExtElement ExtGroup::multiply(const ExtElement& a, const ExtElement& b) const {
  const std::size_t m = grading_.classes.num_factors();
  const std::vector<Int>& orders = twist_.homology.invariants().torsion;
  ExtElement out = zero();
  for (std::size_t i = 0; i < m; ++i)
    out.grading[i] = positive_mod(a.grading[i] + b.grading[i], grading_.classes.factor_order(i));
  for (std::size_t f = 0; f < num_torsion_; ++f) {
    Int n = a.twist_num[f] + b.twist_num[f];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        n += a.grading[i] * b.grading[j] * pairing_[i][j][f];
    out.twist_num[f] = positive_mod(n, orders[f]);
  }
  return out;
}

ExtElement ExtGroup::inverse(const ExtElement& a) const {
  const std::size_t m = grading_.classes.num_factors();
  const std::vector<Int>& orders = twist_.homology.invariants().torsion;
  ExtElement out = a;  // grading has exponent two
  for (std::size_t f = 0; f < num_torsion_; ++f) {
    Int n = -a.twist_num[f];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        n -= a.grading[i] * a.grading[j] * pairing_[i][j][f];
    out.twist_num[f] = positive_mod(n, orders[f]);
  }
  return out;
}

ExtElement ExtGroup::power(ExtElement a, Int k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  ExtElement out = zero();
  for (Int i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

Int ExtGroup::finite_order() const {
  Int n = 1;
  for (std::size_t i = 0; i < grading_.classes.num_factors(); ++i)
    n *= grading_.classes.factor_order(i);
  for (const Int& d : twist_.homology.invariants().torsion) n *= d;
  return n;
}

std::vector<ExtElement> ExtGroup::elements(std::size_t budget) const {
  Int order = finite_order();
  if (order > budget)
    throw BudgetExceeded("ext group: " + order.str() + " elements exceed the budget of " +
                         std::to_string(budget));
  std::vector<ExtElement> out;
  ExtElement cur = zero();
  const std::vector<Int>& orders = twist_.homology.invariants().torsion;
  while (true) {
    out.push_back(cur);
    // Odometer over grading coordinates, then twist numerators.
    std::size_t i = 0;
    for (; i < cur.grading.size(); ++i) {
      cur.grading[i] += 1;
      if (cur.grading[i] < grading_.classes.factor_order(i)) break;
      cur.grading[i] = 0;
    }
    if (i < cur.grading.size()) continue;
    std::size_t f = 0;
    for (; f < cur.twist_num.size(); ++f) {
      cur.twist_num[f] += 1;
      if (cur.twist_num[f] < orders[f]) break;
      cur.twist_num[f] = 0;
    }
    if (f == cur.twist_num.size()) break;
  }
  return out;
}

AbelianInvariants ExtGroup::finite_invariants() const {
  std::vector<ExtElement> all = elements();
  ExtElement id = zero();
  auto killed = [&](const Int& k) {
    Int cnt = 0;
    for (const ExtElement& x : all)
      if (power(x, k) == id) ++cnt;
    return cnt;
  };
  return invariants_from_order_counts(finite_order(), killed);
}

bool ExtGroup::splits() const {
  std::vector<ExtElement> all = elements();
  ExtElement id = zero();
  for (std::size_t i = 0; i < grading_.classes.num_factors(); ++i) {
    Int q = grading_.classes.factor_order(i);
    bool found = false;
    for (const ExtElement& x : all) {
      bool is_unit = true;
      for (std::size_t j = 0; j < x.grading.size(); ++j)
        if (x.grading[j] != (j == i ? 1 : 0)) {
          is_unit = false;
          break;
        }
      if (is_unit && power(x, q) == id) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

ExtGroup ext_group(const RealGroupoid& g, std::size_t level_budget) {
  Nerve nv = build_nerve(g, 3, level_budget);
  return ExtGroup(nv);
}

std::string BrauerGroup::to_string() const {
  AbelianInvariants fin = total_finite();
  if (circle_rank == 0) return fin.to_string();
  std::string out = circle_rank == 1 ? "S1" : "(S1)^" + std::to_string(circle_rank);
  if (!fin.trivial()) out += " + " + fin.to_string();
  return out;
}

BrauerGroup brauer_group(const RealGroupoid& g, std::size_t level_budget) {
  Nerve nv = build_nerve(g, 3, level_budget);
  BrauerGroup out;
  out.type_part = real_cohomology(nv, 0, coeff_Zm(8, +1)).invariants;
  ExtGroup ext(nv);
  out.ext_finite = ext.finite_invariants();
  out.ext_splits = ext.splits();
  out.circle_rank = ext.circle_rank();
  out.free_involution_note = involution_is_free(g);
  return out;
}

}  // namespace rcech
