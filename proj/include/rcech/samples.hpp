#pragma once

#include <string>
#include <vector>

#include "rcech/groupoid.hpp"

namespace rcech {

// Registry of small named groupoids (every one has at most 8 arrows).
// Used by tests, the command line tool, and fixture generation.
std::vector<std::string> sample_names();
RealGroupoid sample_groupoid(const std::string& name);

}  // namespace rcech
