#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rcech {

// Finite group presented by its multiplication table, together with an
// involutive automorphism. Used as a building block for group groupoids
// and orientifold actions.
struct FiniteGroup {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = g*h
  std::vector<std::size_t> involution;          // automorphism with square id

  std::size_t unit() const;
  std::size_t inverse(std::size_t g) const;
  void validate() const;

  static FiniteGroup cyclic(std::size_t n, const std::string& involution_kind = "trivial");
  static FiniteGroup product_of_cyclics(const std::vector<std::size_t>& ns,
                                        const std::string& involution_kind = "trivial");
};

// Finite groupoid with an involutive strict automorphism ("Real structure").
// Arrows compose like functions: compose(g, h) is defined when s(g) == r(h),
// the composite running first through h, then through g.
struct RealGroupoid {
  struct Arrow {
    std::size_t src = 0;  // s(g)
    std::size_t tgt = 0;  // r(g)
  };

  std::size_t num_objects = 0;
  std::vector<std::string> object_names;  // optional; auto-filled when empty
  std::vector<Arrow> arrows;
  std::vector<std::vector<long long>> compose_table;  // -1 where undefined
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> obj_involution;
  std::vector<std::size_t> arr_involution;

  // Filled by validate().
  std::vector<std::size_t> unit;  // identity arrow per object

  bool composable(std::size_t g, std::size_t h) const {
    return arrows[g].src == arrows[h].tgt;
  }
  std::size_t compose(std::size_t g, std::size_t h) const;

  std::size_t isotropy_order(std::size_t x) const;  // arrows x -> x

  // Checks every axiom exhaustively and fills unit[]. Throws
  // std::invalid_argument naming the first violated axiom and the
  // offending objects/arrows.
  void validate();

  std::string object_label(std::size_t x) const;
};

RealGroupoid group_groupoid(const FiniteGroup& g);
RealGroupoid pair_groupoid(std::size_t npoints, std::vector<std::size_t> obj_involution);
RealGroupoid real_space_groupoid(std::size_t npoints, std::vector<std::size_t> involution);

// Two disjoint copies of h (its own involution is discarded), with the
// Real structure that swaps them.
RealGroupoid swap_double(const RealGroupoid& h);

// Same groupoid with the identity Real structure.
RealGroupoid trivialize(const RealGroupoid& h);

// Action groupoid X x| G for a right action of G on X: arrows (x, g)
// from x.g to x, composing (x,g)(x.g,h) = (x,gh), with involution
// (x,g) -> (xbar, gbar). The action must be free unless allow_non_free.
RealGroupoid orientifold_groupoid(std::size_t npoints, const std::vector<std::size_t>& point_involution,
                                  const FiniteGroup& g,
                                  const std::vector<std::vector<std::size_t>>& action,
                                  bool allow_non_free = false);

// True when the Real structure is free on objects and arrows (no fixed
// points). Such groupoids are exactly the swap-double shaped ones.
bool involution_is_free(const RealGroupoid& g);

}  // namespace rcech
