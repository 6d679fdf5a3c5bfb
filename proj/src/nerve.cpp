#include "rcech/nerve.hpp"

#include <stdexcept>

#include "rcech/budget.hpp"

namespace rcech {

std::size_t Nerve::index_of(std::size_t n, const std::vector<std::size_t>& t) const {
  auto it = lookup_[n].find(t);
  if (it == lookup_[n].end()) throw std::invalid_argument("nerve: no such simplex");
  return it->second;
}

Nerve build_nerve(const RealGroupoid& g, std::size_t max_level, std::size_t level_budget) {
  Nerve nv;
  nv.groupoid = g;
  nv.groupoid.validate();
  nv.max_level = max_level;
  nv.tuples.resize(max_level + 1);
  nv.face_index.resize(max_level + 1);
  nv.tau.resize(max_level + 1);
  nv.lookup_.resize(max_level + 1);

  const RealGroupoid& go = nv.groupoid;
  const std::size_t na = go.arrows.size();

  // Arrows grouped by range, ascending, for prefix extension.
  std::vector<std::vector<std::size_t>> by_range(go.num_objects);
  for (std::size_t a = 0; a < na; ++a) by_range[go.arrows[a].tgt].push_back(a);

  for (std::size_t x = 0; x < go.num_objects; ++x) nv.tuples[0].push_back({x});
  if (max_level >= 1)
    for (std::size_t a = 0; a < na; ++a) nv.tuples[1].push_back({a});
  for (std::size_t n = 2; n <= max_level; ++n) {
    for (const auto& prefix : nv.tuples[n - 1]) {
      std::size_t tail_src = go.arrows[prefix.back()].src;
      for (std::size_t a : by_range[tail_src]) {
        if (nv.tuples[n].size() >= level_budget)
          throw BudgetExceeded("nerve: level " + std::to_string(n) + " exceeds the budget of " +
                               std::to_string(level_budget) + " simplices");
        std::vector<std::size_t> t = prefix;
        t.push_back(a);
        nv.tuples[n].push_back(std::move(t));
      }
    }
  }
  for (std::size_t n = 0; n <= max_level; ++n) {
    if (nv.tuples[n].size() > level_budget)
      throw BudgetExceeded("nerve: level " + std::to_string(n) + " exceeds the budget of " +
                           std::to_string(level_budget) + " simplices");
    for (std::size_t i = 0; i < nv.tuples[n].size(); ++i) nv.lookup_[n][nv.tuples[n][i]] = i;
  }

  for (std::size_t n = 0; n <= max_level; ++n) {
    nv.tau[n].resize(nv.tuples[n].size());
    for (std::size_t i = 0; i < nv.tuples[n].size(); ++i) {
      std::vector<std::size_t> t = nv.tuples[n][i];
      if (n == 0) {
        t[0] = go.obj_involution[t[0]];
      } else {
        for (std::size_t& a : t) a = go.arr_involution[a];
      }
      nv.tau[n][i] = nv.lookup_[n].at(t);
    }
  }

  for (std::size_t n = 1; n <= max_level; ++n) {
    nv.face_index[n].assign(n + 1, std::vector<std::size_t>(nv.tuples[n].size()));
    for (std::size_t i = 0; i < nv.tuples[n].size(); ++i) {
      const std::vector<std::size_t>& t = nv.tuples[n][i];
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> f;
        if (n == 1) {
          f = {k == 0 ? go.arrows[t[0]].src : go.arrows[t[0]].tgt};
        } else if (k == 0) {
          f.assign(t.begin() + 1, t.end());
        } else if (k == n) {
          f.assign(t.begin(), t.end() - 1);
        } else {
          f.assign(t.begin(), t.end());
          f[k - 1] = go.compose(t[k - 1], t[k]);
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        }
        nv.face_index[n][k][i] = nv.lookup_[n - 1].at(f);
      }
    }
  }
  return nv;
}

}  // namespace rcech
