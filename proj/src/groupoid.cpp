#include "rcech/groupoid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcech {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

bool is_permutation(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

std::size_t FiniteGroup::unit() const {
  // A multiplication table determines at most one two-sided identity.
  for (std::size_t e = 0; e < size; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < size && ok; ++g)
      ok = table[e][g] == g && table[g][e] == g;
    if (ok) return e;
  }
  fail("group: no identity element");
}

std::size_t FiniteGroup::inverse(std::size_t g) const {
  std::size_t e = unit();
  for (std::size_t h = 0; h < size; ++h)
    if (table[g][h] == e && table[h][g] == e) return h;
  fail("group: element " + std::to_string(g) + " has no inverse");
}

void FiniteGroup::validate() const {
  if (size == 0) fail("group: empty");
  if (table.size() != size) fail("group: multiplication table has wrong number of rows");
  for (std::size_t g = 0; g < size; ++g) {
    if (table[g].size() != size)
      fail("group: multiplication table row " + std::to_string(g) + " has wrong length");
    for (std::size_t h = 0; h < size; ++h)
      if (table[g][h] >= size)
        fail("group: table entry (" + std::to_string(g) + "," + std::to_string(h) + ") out of range");
  }
  for (std::size_t g = 0; g < size; ++g)
    for (std::size_t h = 0; h < size; ++h)
      for (std::size_t k = 0; k < size; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]])
          fail("group: associativity fails at (" + std::to_string(g) + "," + std::to_string(h) +
               "," + std::to_string(k) + ")");
  unit();  // throws when missing
  for (std::size_t g = 0; g < size; ++g) inverse(g);
  if (!is_permutation(involution, size)) fail("group: involution is not a permutation");
  for (std::size_t g = 0; g < size; ++g)
    if (involution[involution[g]] != g)
      fail("group: involution does not square to the identity at " + std::to_string(g));
  for (std::size_t g = 0; g < size; ++g)
    for (std::size_t h = 0; h < size; ++h)
      if (involution[table[g][h]] != table[involution[g]][involution[h]])
        fail("group: involution is not multiplicative at (" + std::to_string(g) + "," +
             std::to_string(h) + ")");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n, const std::string& involution_kind) {
  if (n == 0) fail("group: cyclic order must be positive");
  FiniteGroup g;
  g.size = n;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  g.involution.resize(n);
  if (involution_kind == "trivial") {
    for (std::size_t a = 0; a < n; ++a) g.involution[a] = a;
  } else if (involution_kind == "inversion") {
    for (std::size_t a = 0; a < n; ++a) g.involution[a] = (n - a) % n;
  } else {
    fail("group: unknown involution kind '" + involution_kind + "'");
  }
  return g;
}

FiniteGroup FiniteGroup::product_of_cyclics(const std::vector<std::size_t>& ns,
                                            const std::string& involution_kind) {
  if (ns.empty()) fail("group: empty factor list");
  std::size_t n = 1;
  for (std::size_t m : ns) {
    if (m == 0) fail("group: cyclic order must be positive");
    n *= m;
  }
  // Mixed-radix encoding, last factor fastest.
  auto decode = [&](std::size_t v) {
    std::vector<std::size_t> digits(ns.size());
    for (std::size_t i = ns.size(); i-- > 0;) {
      digits[i] = v % ns[i];
      v /= ns[i];
    }
    return digits;
  };
  auto encode = [&](const std::vector<std::size_t>& digits) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) v = v * ns[i] + digits[i];
    return v;
  };
  FiniteGroup g;
  g.size = n;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto da = decode(a), db = decode(b);
      for (std::size_t i = 0; i < ns.size(); ++i) da[i] = (da[i] + db[i]) % ns[i];
      g.table[a][b] = encode(da);
    }
  g.involution.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (involution_kind == "trivial") {
      g.involution[a] = a;
    } else if (involution_kind == "inversion") {
      auto da = decode(a);
      for (std::size_t i = 0; i < ns.size(); ++i) da[i] = (ns[i] - da[i]) % ns[i];
      g.involution[a] = encode(da);
    } else {
      fail("group: unknown involution kind '" + involution_kind + "'");
    }
  }
  return g;
}

std::size_t RealGroupoid::compose(std::size_t g, std::size_t h) const {
  long long r = compose_table[g][h];
  if (r < 0)
    fail("compose(" + std::to_string(g) + "," + std::to_string(h) + ") is undefined");
  return static_cast<std::size_t>(r);
}

std::size_t RealGroupoid::isotropy_order(std::size_t x) const {
  std::size_t n = 0;
  for (const Arrow& a : arrows)
    if (a.src == x && a.tgt == x) ++n;
  return n;
}

std::string RealGroupoid::object_label(std::size_t x) const {
  if (x < object_names.size() && !object_names[x].empty()) return object_names[x];
  return "x" + std::to_string(x);
}

void RealGroupoid::validate() {
  const std::size_t na = arrows.size();
  if (num_objects == 0) fail("groupoid: no objects");

  // Shapes first, so every later check can index freely.
  for (std::size_t g = 0; g < na; ++g)
    if (arrows[g].src >= num_objects || arrows[g].tgt >= num_objects)
      fail("groupoid: arrow " + std::to_string(g) + " has endpoint out of range");
  if (compose_table.size() != na) fail("groupoid: compose table has wrong number of rows");
  for (std::size_t g = 0; g < na; ++g)
    if (compose_table[g].size() != na)
      fail("groupoid: compose table row " + std::to_string(g) + " has wrong length");
  if (inverse.size() != na) fail("groupoid: inverse list has wrong length");
  for (std::size_t g = 0; g < na; ++g)
    if (inverse[g] >= na) fail("groupoid: inverse of arrow " + std::to_string(g) + " out of range");
  if (!is_permutation(obj_involution, num_objects))
    fail("groupoid: object involution is not a permutation");
  if (!is_permutation(arr_involution, na))
    fail("groupoid: arrow involution is not a permutation");

  // Composition is defined exactly on matching endpoints and respects them.
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t h = 0; h < na; ++h) {
      long long c = compose_table[g][h];
      bool should = composable(g, h);
      if (should != (c >= 0))
        fail(std::string("groupoid: compose(") + std::to_string(g) + "," + std::to_string(h) +
             ") " + (should ? "must be defined (endpoints match)" : "must be undefined"));
      if (c >= 0) {
        if (static_cast<std::size_t>(c) >= na)
          fail("groupoid: compose(" + std::to_string(g) + "," + std::to_string(h) +
               ") out of range");
        const Arrow& gh = arrows[static_cast<std::size_t>(c)];
        if (gh.src != arrows[h].src || gh.tgt != arrows[g].tgt)
          fail("groupoid: compose(" + std::to_string(g) + "," + std::to_string(h) +
               ") has wrong endpoints");
      }
    }

  // Units: every object needs a two-sided identity arrow.
  unit.assign(num_objects, 0);
  std::vector<char> have_unit(num_objects, 0);
  for (std::size_t u = 0; u < na; ++u) {
    if (arrows[u].src != arrows[u].tgt) continue;
    std::size_t x = arrows[u].src;
    bool ok = true;
    for (std::size_t g = 0; g < na && ok; ++g) {
      if (arrows[g].src == x && compose_table[g][u] != static_cast<long long>(g)) ok = false;
      if (arrows[g].tgt == x && compose_table[u][g] != static_cast<long long>(g)) ok = false;
    }
    if (ok) {
      unit[x] = u;
      have_unit[x] = 1;
    }
  }
  for (std::size_t x = 0; x < num_objects; ++x)
    if (!have_unit[x]) fail("groupoid: object " + object_label(x) + " has no identity arrow");

  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t h = 0; h < na; ++h) {
      if (!composable(g, h)) continue;
      std::size_t gh = compose(g, h);
      for (std::size_t k = 0; k < na; ++k) {
        if (!composable(h, k)) continue;
        if (compose(gh, k) != compose(g, compose(h, k)))
          fail("groupoid: associativity fails at (" + std::to_string(g) + "," + std::to_string(h) +
               "," + std::to_string(k) + ")");
      }
    }

  for (std::size_t g = 0; g < na; ++g) {
    std::size_t gi = inverse[g];
    if (arrows[gi].src != arrows[g].tgt || arrows[gi].tgt != arrows[g].src)
      fail("groupoid: inverse of arrow " + std::to_string(g) + " has wrong endpoints");
    if (compose(g, gi) != unit[arrows[g].tgt] || compose(gi, g) != unit[arrows[g].src])
      fail("groupoid: arrow " + std::to_string(g) + " fails the inverse law");
  }

  for (std::size_t x = 0; x < num_objects; ++x)
    if (obj_involution[obj_involution[x]] != x)
      fail("groupoid: object involution does not square to the identity at " + object_label(x));
  for (std::size_t g = 0; g < na; ++g)
    if (arr_involution[arr_involution[g]] != g)
      fail("groupoid: arrow involution does not square to the identity at " + std::to_string(g));
  for (std::size_t g = 0; g < na; ++g) {
    std::size_t gb = arr_involution[g];
    if (arrows[gb].src != obj_involution[arrows[g].src] ||
        arrows[gb].tgt != obj_involution[arrows[g].tgt])
      fail("groupoid: involution of arrow " + std::to_string(g) +
           " is incompatible with the endpoint involution");
  }
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t h = 0; h < na; ++h) {
      if (!composable(g, h)) continue;
      if (arr_involution[compose(g, h)] != compose(arr_involution[g], arr_involution[h]))
        fail("groupoid: involution is not functorial at (" + std::to_string(g) + "," +
             std::to_string(h) + ")");
    }
  // Units then map to units automatically, but state it as a hard invariant.
  for (std::size_t x = 0; x < num_objects; ++x)
    if (arr_involution[unit[x]] != unit[obj_involution[x]])
      fail("groupoid: involution moves the identity arrow of " + object_label(x) +
           " off an identity");
}

RealGroupoid group_groupoid(const FiniteGroup& g) {
  g.validate();
  RealGroupoid out;
  out.num_objects = 1;
  out.object_names = {"pt"};
  out.arrows.assign(g.size, {0, 0});
  out.compose_table.assign(g.size, std::vector<long long>(g.size));
  for (std::size_t a = 0; a < g.size; ++a)
    for (std::size_t b = 0; b < g.size; ++b)
      out.compose_table[a][b] = static_cast<long long>(g.table[a][b]);
  out.inverse.resize(g.size);
  for (std::size_t a = 0; a < g.size; ++a) out.inverse[a] = g.inverse(a);
  out.obj_involution = {0};
  out.arr_involution = g.involution;
  out.validate();
  return out;
}

RealGroupoid pair_groupoid(std::size_t npoints, std::vector<std::size_t> obj_involution) {
  if (npoints == 0) fail("pair groupoid: need at least one point");
  if (!is_permutation(obj_involution, npoints))
    fail("pair groupoid: involution is not a permutation of the points");
  RealGroupoid out;
  out.num_objects = npoints;
  const std::size_t n = npoints;
  // Arrow (x, y): y -> x, stored at index x*n + y.
  out.arrows.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out.arrows[x * n + y] = {y, x};
  out.compose_table.assign(n * n, std::vector<long long>(n * n, -1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        out.compose_table[x * n + y][y * n + z] = static_cast<long long>(x * n + z);
  out.inverse.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out.inverse[x * n + y] = y * n + x;
  out.obj_involution = obj_involution;
  out.arr_involution.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out.arr_involution[x * n + y] = obj_involution[x] * n + obj_involution[y];
  out.validate();
  return out;
}

RealGroupoid real_space_groupoid(std::size_t npoints, std::vector<std::size_t> involution) {
  if (npoints == 0) fail("space groupoid: need at least one point");
  if (!is_permutation(involution, npoints))
    fail("space groupoid: involution is not a permutation of the points");
  RealGroupoid out;
  out.num_objects = npoints;
  out.arrows.resize(npoints);
  for (std::size_t x = 0; x < npoints; ++x) out.arrows[x] = {x, x};
  out.compose_table.assign(npoints, std::vector<long long>(npoints, -1));
  for (std::size_t x = 0; x < npoints; ++x) out.compose_table[x][x] = static_cast<long long>(x);
  out.inverse.resize(npoints);
  for (std::size_t x = 0; x < npoints; ++x) out.inverse[x] = x;
  out.obj_involution = involution;
  out.arr_involution = std::move(involution);
  out.validate();
  return out;
}

RealGroupoid swap_double(const RealGroupoid& h) {
  const std::size_t no = h.num_objects, na = h.arrows.size();
  RealGroupoid out;
  out.num_objects = 2 * no;
  out.object_names.resize(2 * no);
  for (std::size_t x = 0; x < no; ++x) {
    out.object_names[x] = h.object_label(x) + "+";
    out.object_names[no + x] = h.object_label(x) + "-";
  }
  out.arrows.resize(2 * na);
  for (std::size_t a = 0; a < na; ++a) {
    out.arrows[a] = h.arrows[a];
    out.arrows[na + a] = {no + h.arrows[a].src, no + h.arrows[a].tgt};
  }
  out.compose_table.assign(2 * na, std::vector<long long>(2 * na, -1));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      long long c = h.compose_table[a][b];
      if (c < 0) continue;
      out.compose_table[a][b] = c;
      out.compose_table[na + a][na + b] = static_cast<long long>(na) + c;
    }
  out.inverse.resize(2 * na);
  for (std::size_t a = 0; a < na; ++a) {
    out.inverse[a] = h.inverse[a];
    out.inverse[na + a] = na + h.inverse[a];
  }
  out.obj_involution.resize(2 * no);
  for (std::size_t x = 0; x < no; ++x) {
    out.obj_involution[x] = no + x;
    out.obj_involution[no + x] = x;
  }
  out.arr_involution.resize(2 * na);
  for (std::size_t a = 0; a < na; ++a) {
    out.arr_involution[a] = na + a;
    out.arr_involution[na + a] = a;
  }
  out.validate();
  return out;
}

RealGroupoid trivialize(const RealGroupoid& h) {
  RealGroupoid out = h;
  for (std::size_t x = 0; x < out.num_objects; ++x) out.obj_involution[x] = x;
  for (std::size_t a = 0; a < out.arrows.size(); ++a) out.arr_involution[a] = a;
  out.validate();
  return out;
}

RealGroupoid orientifold_groupoid(std::size_t npoints, const std::vector<std::size_t>& point_involution,
                                  const FiniteGroup& g,
                                  const std::vector<std::vector<std::size_t>>& action,
                                  bool allow_non_free) {
  g.validate();
  if (npoints == 0) fail("orientifold: need at least one point");
  if (!is_permutation(point_involution, npoints))
    fail("orientifold: point involution is not a permutation");
  for (std::size_t x = 0; x < npoints; ++x)
    if (point_involution[point_involution[x]] != x)
      fail("orientifold: point involution does not square to the identity at " + std::to_string(x));
  if (action.size() != npoints) fail("orientifold: action table has wrong number of rows");
  for (std::size_t x = 0; x < npoints; ++x) {
    if (action[x].size() != g.size)
      fail("orientifold: action table row " + std::to_string(x) + " has wrong length");
    for (std::size_t a = 0; a < g.size; ++a)
      if (action[x][a] >= npoints)
        fail("orientifold: action entry (" + std::to_string(x) + "," + std::to_string(a) +
             ") out of range");
  }
  const std::size_t e = g.unit();
  for (std::size_t x = 0; x < npoints; ++x)
    if (action[x][e] != x)
      fail("orientifold: identity does not act trivially at point " + std::to_string(x));
  for (std::size_t x = 0; x < npoints; ++x)
    for (std::size_t a = 0; a < g.size; ++a)
      for (std::size_t b = 0; b < g.size; ++b)
        if (action[action[x][a]][b] != action[x][g.table[a][b]])
          fail("orientifold: not a right action at (" + std::to_string(x) + "," +
               std::to_string(a) + "," + std::to_string(b) + ")");
  for (std::size_t x = 0; x < npoints; ++x)
    for (std::size_t a = 0; a < g.size; ++a)
      if (point_involution[action[x][a]] != action[point_involution[x]][g.involution[a]])
        fail("orientifold: action is not equivariant at (" + std::to_string(x) + "," +
             std::to_string(a) + ")");
  if (!allow_non_free) {
    for (std::size_t x = 0; x < npoints; ++x)
      for (std::size_t a = 0; a < g.size; ++a)
        if (a != e && action[x][a] == x)
          fail("orientifold: action is not free (element " + std::to_string(a) +
               " fixes point " + std::to_string(x) + "); pass allow_non_free to accept");
  }

  RealGroupoid out;
  out.num_objects = npoints;
  const std::size_t n = g.size;
  out.arrows.resize(npoints * n);
  for (std::size_t x = 0; x < npoints; ++x)
    for (std::size_t a = 0; a < n; ++a) out.arrows[x * n + a] = {action[x][a], x};
  out.compose_table.assign(npoints * n, std::vector<long long>(npoints * n, -1));
  for (std::size_t x = 0; x < npoints; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        out.compose_table[x * n + a][action[x][a] * n + b] =
            static_cast<long long>(x * n + g.table[a][b]);
  out.inverse.resize(npoints * n);
  for (std::size_t x = 0; x < npoints; ++x)
    for (std::size_t a = 0; a < n; ++a) out.inverse[x * n + a] = action[x][a] * n + g.inverse(a);
  out.obj_involution = point_involution;
  out.arr_involution.resize(npoints * n);
  for (std::size_t x = 0; x < npoints; ++x)
    for (std::size_t a = 0; a < n; ++a)
      out.arr_involution[x * n + a] = point_involution[x] * n + g.involution[a];
  out.validate();
  return out;
}

bool involution_is_free(const RealGroupoid& g) {
  for (std::size_t x = 0; x < g.num_objects; ++x)
    if (g.obj_involution[x] == x) return false;
  for (std::size_t a = 0; a < g.arrows.size(); ++a)
    if (g.arr_involution[a] == a) return false;
  return true;
}

}  // namespace rcech
