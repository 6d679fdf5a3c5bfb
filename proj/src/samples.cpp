#include "rcech/samples.hpp"

#include <stdexcept>

namespace rcech {

std::vector<std::string> sample_names() {
  return {
      "point",        "z2",          "z3",           "z4",        "z2z2",
      "z3_inv",       "z4_inv",      "pair2",        "pair2_swap", "points3_mixed",
      "double_point", "double_z2",   "double_z3",    "double_pair2",
      "orientifold_ab",
  };
}

RealGroupoid sample_groupoid(const std::string& name) {
  if (name == "point") return group_groupoid(FiniteGroup::cyclic(1));
  if (name == "z2") return group_groupoid(FiniteGroup::cyclic(2));
  if (name == "z3") return group_groupoid(FiniteGroup::cyclic(3));
  if (name == "z4") return group_groupoid(FiniteGroup::cyclic(4));
  if (name == "z2z2") return group_groupoid(FiniteGroup::product_of_cyclics({2, 2}));
  if (name == "z3_inv") return group_groupoid(FiniteGroup::cyclic(3, "inversion"));
  if (name == "z4_inv") return group_groupoid(FiniteGroup::cyclic(4, "inversion"));
  if (name == "pair2") return pair_groupoid(2, {0, 1});
  if (name == "pair2_swap") return pair_groupoid(2, {1, 0});
  if (name == "points3_mixed") return real_space_groupoid(3, {1, 0, 2});
  if (name == "double_point") return swap_double(group_groupoid(FiniteGroup::cyclic(1)));
  if (name == "double_z2") return swap_double(group_groupoid(FiniteGroup::cyclic(2)));
  if (name == "double_z3") return swap_double(group_groupoid(FiniteGroup::cyclic(3)));
  if (name == "double_pair2") return swap_double(pair_groupoid(2, {0, 1}));
  if (name == "orientifold_ab") {
    // Free transitive flip action of the order two group on two points,
    // with the points themselves also exchanged by the Real structure.
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    std::vector<std::vector<std::size_t>> action = {{0, 1}, {1, 0}};
    return orientifold_groupoid(2, {1, 0}, z2, action);
  }
  throw std::invalid_argument("unknown sample groupoid '" + name + "'");
}

}  // namespace rcech
