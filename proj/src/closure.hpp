#pragma once

#include <cstddef>
#include <vector>

#include "kaninj/poset.hpp"

namespace kaninj::detail {

/// Strongly connected components of a directed graph together with the
/// reflexive-transitive reachability between them. Component ids follow the
/// order of each component's smallest node.
struct Condensed {
  std::vector<std::size_t> component;
  std::size_t count = 0;
  std::vector<Bitset> reach;
};

Condensed condense(std::size_t n, const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace kaninj::detail
