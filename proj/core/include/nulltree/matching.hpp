#pragma once

#include <cstddef>

#include "nulltree/tree.hpp"
#include "nulltree/vertex_vector.hpp"

namespace nulltree {

/// Tree dynamic programs. All of them root the tree at its smallest vertex
/// and run iteratively (no recursion depth limits).

/// Matching number.
std::size_t nu(const Tree& t);
/// Number of maximum matchings.
Integer count_max_matchings(const Tree& t);
/// Independence number by the include/exclude DP.
std::size_t alpha(const Tree& t);
/// Independence number as |V| - nu (Koenig-Egervary, trees are bipartite).
std::size_t alpha_by_koenig(const Tree& t);
/// Domination number.
std::size_t gamma(const Tree& t);

struct MatchingInvariants {
  std::size_t nu = 0;
  Integer m_count = 1;
  std::size_t alpha = 0;
  std::size_t gamma = 0;
};

MatchingInvariants matching_invariants(const Tree& t);

}  // namespace nulltree
