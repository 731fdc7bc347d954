#include "nulltree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "nulltree/error.hpp"

namespace nulltree {

namespace {

std::vector<VertexId> members(const Tree& t, std::uint32_t mask) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < t.order(); ++i) {
    if (mask >> i & 1u) out.push_back(t.vertex(i));
  }
  return out;
}

}  // namespace

OracleReport brute_force(const Tree& t, std::size_t limit) {
  const std::size_t n = t.order();
  if (n > limit || n > 24) {
    throw Error(ErrorCode::kTooLarge,
                "brute force on " + std::to_string(n) + " vertices (limit " +
                    std::to_string(limit) + ")");
  }
  OracleReport report;
  const std::uint32_t all = (1u << n) - 1u;

  std::vector<std::uint32_t> closed_nbhd(n);
  for (std::size_t i = 0; i < n; ++i) {
    closed_nbhd[i] = 1u << i;
    for (std::size_t j : t.neighbor_indices(i)) closed_nbhd[i] |= 1u << j;
  }

  std::size_t best_is = 0;
  std::size_t best_ds = n + 1;
  std::vector<std::uint32_t> is_masks;
  std::vector<std::uint32_t> ds_masks;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    bool independent = true;
    std::uint32_t dominated = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      dominated |= closed_nbhd[i];
      if ((closed_nbhd[i] & ~(1u << i)) & mask) independent = false;
    }
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (independent) {
      if (size > best_is) {
        best_is = size;
        is_masks.clear();
      }
      if (size == best_is) is_masks.push_back(mask);
    }
    if (dominated == all) {
      if (size < best_ds) {
        best_ds = size;
        ds_masks.clear();
      }
      if (size == best_ds) ds_masks.push_back(mask);
    }
    if (mask == all) break;
  }
  for (std::uint32_t m : is_masks) {
    report.max_independent_sets.push_back(members(t, m));
    // C is a vertex cover iff V \ C is independent.
    report.min_vertex_covers.push_back(members(t, all & ~m));
  }
  for (std::uint32_t m : ds_masks) report.min_dominating_sets.push_back(members(t, m));
  std::sort(report.min_vertex_covers.begin(), report.min_vertex_covers.end());

  const std::vector<Edge> edges = t.edges();
  std::vector<std::uint32_t> edge_mask(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    edge_mask[k] = (1u << t.index_of(edges[k].u)) | (1u << t.index_of(edges[k].v));
  }
  std::vector<std::uint32_t> best_matchings;
  const std::uint32_t edge_all = (1u << edges.size()) - 1u;
  for (std::uint32_t sel = 0; sel <= edge_all; ++sel) {
    std::uint32_t covered = 0;
    bool ok = true;
    for (std::size_t k = 0; k < edges.size() && ok; ++k) {
      if (!(sel >> k & 1u)) continue;
      if (covered & edge_mask[k]) ok = false;
      covered |= edge_mask[k];
    }
    if (ok) {
      const auto size = static_cast<std::size_t>(std::popcount(sel));
      if (size > report.nu) {
        report.nu = size;
        best_matchings.clear();
      }
      if (size == report.nu) best_matchings.push_back(sel);
    }
    if (sel == edge_all) break;
  }
  for (std::uint32_t sel : best_matchings) {
    std::vector<Edge> m;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (sel >> k & 1u) m.push_back(edges[k]);
    }
    report.matchings.push_back(std::move(m));
  }
  return report;
}

}  // namespace nulltree
