#pragma once

#include <cstddef>
#include <vector>

#include "nulltree/tree.hpp"

namespace nulltree {

/// Exhaustive enumeration results for a small tree.
struct OracleReport {
  std::size_t nu = 0;
  std::vector<std::vector<Edge>> matchings;  // all maximum matchings
  std::vector<std::vector<VertexId>> max_independent_sets;
  std::vector<std::vector<VertexId>> min_vertex_covers;
  std::vector<std::vector<VertexId>> min_dominating_sets;
};

inline constexpr std::size_t kDefaultBruteForceLimit = 16;

/// Enumerates every vertex subset (independent sets, vertex covers,
/// dominating sets) and every edge subset (matchings) of t.
/// Throws Error(kTooLarge) when t has more than `limit` vertices.
OracleReport brute_force(const Tree& t,
                         std::size_t limit = kDefaultBruteForceLimit);

}  // namespace nulltree
