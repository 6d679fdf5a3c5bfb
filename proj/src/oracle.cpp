#include "rcech/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rcech/budget.hpp"

namespace rcech {

namespace {

// Plain orbit scan, kept local on purpose: the oracle must not lean on the
// code it is checking.
struct Orbits {
  std::vector<std::size_t> rep;       // orbit -> representative (lowest index)
  std::vector<std::size_t> orbit_of;  // simplex -> orbit
  std::vector<char> fixed;
};

Orbits scan(const Nerve& nv, std::size_t n) {
  Orbits o;
  std::size_t size = nv.level_size(n);
  o.orbit_of.assign(size, 0);
  std::vector<char> seen(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (seen[i]) continue;
    std::size_t j = nv.involution(n, i);
    o.orbit_of[i] = o.orbit_of[j] = o.rep.size();
    o.rep.push_back(i);
    o.fixed.push_back(i == j);
    seen[i] = seen[j] = 1;
  }
  return o;
}

IntVec scaled(const RealCoefficient& a, const IntVec& v, const Int& k) {
  IntVec out = v;
  for (Int& x : out) x *= k;
  return a.reduce(out);
}

// Flattened canonical encoding for set membership.
IntVec flatten(const RealCoefficient& a, const ValueTable& t) {
  IntVec out;
  for (const IntVec& v : t.values) {
    IntVec r = a.reduce(v);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

struct Enumerator {
  const Nerve& nv;
  std::size_t n;
  const RealCoefficient& a;
  const OracleOptions& opt;

  Orbits orbits;
  std::vector<std::vector<IntVec>> candidates;  // per orbit
  // For the pruning cut: (n+1)-simplices become checkable once the last of
  // their face orbits is assigned.
  std::vector<std::vector<std::size_t>> checkable_after;
  std::size_t nodes = 0;

  ValueTable table;
  std::vector<ValueTable> found;

  Enumerator(const Nerve& nv_, std::size_t n_, const RealCoefficient& a_,
             const OracleOptions& opt_, bool with_cut)
      : nv(nv_), n(n_), a(a_), opt(opt_) {
    if (!a.is_finite())
      throw std::invalid_argument("oracle: enumeration needs finite coefficients");
    orbits = scan(nv, n);
    std::vector<IntVec> all = a.elements();
    std::vector<IntVec> sym;
    for (const IntVec& v : all)
      if (a.equal(v, a.involution.apply(v))) sym.push_back(v);
    for (std::size_t o = 0; o < orbits.rep.size(); ++o)
      candidates.push_back(orbits.fixed[o] ? sym : all);

    checkable_after.assign(orbits.rep.size(), {});
    if (with_cut && nv.max_level >= n + 1) {
      for (std::size_t lam = 0; lam < nv.level_size(n + 1); ++lam) {
        std::size_t last = 0;
        for (std::size_t k = 0; k <= n + 1; ++k)
          last = std::max(last, orbits.orbit_of[nv.face(n + 1, k, lam)]);
        checkable_after[last].push_back(lam);
      }
    }
    table.level = n;
    table.values.assign(nv.level_size(n), IntVec(a.ngens(), 0));
  }

  IntVec boundary_value(std::size_t lam) const {
    IntVec sum(a.ngens(), 0);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      const IntVec& v = table.values[nv.face(n + 1, k, lam)];
      sum = (k % 2 == 0) ? a.add(sum, v) : a.sub(sum, v);
    }
    return sum;
  }

  void run(std::size_t o) {
    if (++nodes > opt.node_budget)
      throw BudgetExceeded("oracle: search exceeded the budget of " +
                           std::to_string(opt.node_budget) + " nodes");
    if (o == orbits.rep.size()) {
      found.push_back(table);
      return;
    }
    std::size_t rep = orbits.rep[o];
    std::size_t conj = nv.involution(n, rep);
    for (const IntVec& v : candidates[o]) {
      table.values[rep] = v;
      table.values[conj] = a.reduce(a.involution.apply(v));
      bool ok = true;
      for (std::size_t lam : checkable_after[o])
        if (!a.is_zero(boundary_value(lam))) {
          ok = false;
          break;
        }
      if (ok) run(o + 1);
    }
  }
};

}  // namespace

std::vector<ValueTable> oracle_cocycles(const Nerve& nv, std::size_t n, const RealCoefficient& a,
                                        const OracleOptions& opt, bool prune) {
  if (nv.max_level < n + 1)
    throw std::invalid_argument("oracle: nerve too shallow for degree " + std::to_string(n));
  Enumerator e(nv, n, a, opt, prune);
  e.run(0);
  if (prune) return e.found;
  // Unpruned: filter the full list after the fact.
  std::vector<ValueTable> keep;
  for (ValueTable& t : e.found) {
    e.table = t;
    bool ok = true;
    for (std::size_t lam = 0; lam < nv.level_size(n + 1) && ok; ++lam)
      ok = a.is_zero(e.boundary_value(lam));
    if (ok) keep.push_back(std::move(t));
  }
  return keep;
}

std::vector<ValueTable> oracle_coboundaries(const Nerve& nv, std::size_t n,
                                            const RealCoefficient& a, const OracleOptions& opt) {
  std::vector<ValueTable> out;
  if (n == 0) {
    ValueTable zero;
    zero.level = 0;
    zero.values.assign(nv.level_size(0), IntVec(a.ngens(), 0));
    out.push_back(zero);
    return out;
  }
  Enumerator below(nv, n - 1, a, opt, false);
  below.run(0);
  std::set<IntVec> seen;
  for (const ValueTable& c : below.found) {
    ValueTable d;
    d.level = n;
    d.values.resize(nv.level_size(n));
    for (std::size_t lam = 0; lam < nv.level_size(n); ++lam) {
      IntVec sum(a.ngens(), 0);
      for (std::size_t k = 0; k <= n; ++k) {
        const IntVec& v = c.values[nv.face(n, k, lam)];
        sum = (k % 2 == 0) ? a.add(sum, v) : a.sub(sum, v);
      }
      d.values[lam] = sum;
    }
    if (seen.insert(flatten(a, d)).second) out.push_back(std::move(d));
  }
  return out;
}

AbelianInvariants oracle_cohomology(const Nerve& nv, std::size_t n, const RealCoefficient& a,
                                    const OracleOptions& opt) {
  std::vector<ValueTable> cocycles = oracle_cocycles(nv, n, a, opt);
  std::vector<ValueTable> bounds = oracle_coboundaries(nv, n, a, opt);
  std::set<IntVec> bset;
  for (const ValueTable& b : bounds) bset.insert(flatten(a, b));

  const Int zsize = cocycles.size();
  const Int bsize = bounds.size();
  if (zsize % bsize != 0) throw std::logic_error("oracle: boundary count does not divide");
  Int order = zsize / bsize;

  // Scale every cocycle and count membership in the boundaries; the counts
  // of classes killed by each prime power pin down the cyclic factors.
  auto classes_killed_by = [&](const Int& k) {
    Int cnt = 0;
    for (const ValueTable& z : cocycles) {
      IntVec flat;
      for (const IntVec& v : z.values) {
        IntVec s = scaled(a, v, k);
        flat.insert(flat.end(), s.begin(), s.end());
      }
      if (bset.count(flat)) ++cnt;
    }
    return cnt / bsize;
  };
  return invariants_from_order_counts(order, classes_killed_by);
}

}  // namespace rcech
