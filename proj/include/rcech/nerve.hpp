#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "rcech/groupoid.hpp"

namespace rcech {

inline constexpr std::size_t kDefaultLevelBudget = std::size_t(1) << 20;

// Levels 0..max_level of the simplicial set of a groupoid, with the level
// involutions induced by the Real structure.
//
// Level 0 holds the objects; level n >= 1 holds the strings (g_1, ..., g_n)
// with s(g_i) = r(g_{i+1}), listed lexicographically. Face k of such a
// string drops g_1 (k = 0), composes g_k g_{k+1} (0 < k < n), or drops g_n
// (k = n); faces of a single arrow are its source (k = 0) and range (k = 1).
struct Nerve {
  RealGroupoid groupoid;
  std::size_t max_level = 0;

  std::vector<std::vector<std::vector<std::size_t>>> tuples;      // [n][i] -> string
  std::vector<std::vector<std::vector<std::size_t>>> face_index;  // [n][k][i], 1 <= n, k <= n
  std::vector<std::vector<std::size_t>> tau;                      // [n][i]

  std::size_t level_size(std::size_t n) const { return tuples[n].size(); }
  const std::vector<std::size_t>& tuple(std::size_t n, std::size_t i) const {
    return tuples[n][i];
  }
  std::size_t face(std::size_t n, std::size_t k, std::size_t i) const {
    return face_index[n][k][i];
  }
  std::size_t involution(std::size_t n, std::size_t i) const { return tau[n][i]; }
  std::size_t index_of(std::size_t n, const std::vector<std::size_t>& t) const;

 private:
  friend Nerve build_nerve(const RealGroupoid&, std::size_t, std::size_t);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup_;
};

// Throws BudgetExceeded when any level would hold more than level_budget
// simplices.
Nerve build_nerve(const RealGroupoid& g, std::size_t max_level,
                  std::size_t level_budget = kDefaultLevelBudget);

}  // namespace rcech
