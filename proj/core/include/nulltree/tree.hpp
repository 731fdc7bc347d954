#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nulltree {

/// Stable vertex label. Labels need not be contiguous; every iteration order
/// in the library is ascending by label.
using VertexId = std::uint64_t;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(VertexId w) const { return u == w || v == w; }
  auto operator<=>(const Edge&) const = default;
};

/// Immutable labeled tree. Vertices are kept sorted; internally every vertex
/// has a dense index equal to its rank in the sorted vertex list, and the
/// neighbor lists hold sorted dense indices.
class Tree {
 public:
  /// Builds and validates a tree. Throws Error(kNotATree) on self-loops,
  /// duplicate edges, cycles or disconnection, and Error(kParseError) if an
  /// edge names a vertex missing from `vertices`.
  static Tree from_edges(std::vector<VertexId> vertices,
                         const std::vector<Edge>& edges);
  /// Vertex set inferred from the edges.
  static Tree from_edges(const std::vector<Edge>& edges);
  static Tree single(VertexId v);

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return order() == 0 ? 0 : order() - 1; }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId vertex(std::size_t index) const { return vertices_[index]; }
  VertexId max_id() const { return vertices_.back(); }

  bool contains(VertexId v) const { return find(v).has_value(); }
  std::optional<std::size_t> find(VertexId v) const;
  /// Throws Error(kVertexNotFound).
  std::size_t index_of(VertexId v) const;

  std::span<const std::size_t> neighbor_indices(std::size_t index) const {
    return adjacency_[index];
  }
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const {
    return adjacency_[index_of(v)].size();
  }
  bool adjacent(VertexId a, VertexId b) const;

  /// All edges, sorted.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `subset`; throws Error(kNotATree) when it is not
  /// connected and Error(kVertexNotFound) for unknown vertices.
  Tree induced(std::span<const VertexId> subset) const;

  /// BFS distances (in edges) from the vertex with the given dense index.
  std::vector<std::size_t> distances_from(std::size_t index) const;
  std::size_t distance(VertexId a, VertexId b) const;

  /// Dense-index parent array for the tree rooted at `root_index`, plus the
  /// BFS order (parents before children). The root's parent is itself.
  struct Rooting {
    std::vector<std::size_t> parent;
    std::vector<std::size_t> order;
  };
  Rooting rooted_at(std::size_t root_index) const;

  bool operator==(const Tree& other) const = default;

 private:
  Tree() = default;

  std::vector<VertexId> vertices_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Vertex-disjoint trees.
using Forest = std::vector<Tree>;

/// Connected components of the subgraph of `t` keeping the vertices accepted
/// by `keep_vertex` and the edges (between kept vertices) accepted by
/// `keep_edge`. Components are ordered by smallest vertex.
Forest split(const Tree& t, const std::function<bool(VertexId)>& keep_vertex,
             const std::function<bool(const Edge&)>& keep_edge);

/// Components of the subgraph induced on `subset`.
Forest induced_forest(const Tree& t, std::span<const VertexId> subset);

/// T(u -> v): the subtree on the vertices x whose u-x path passes through v.
Tree subtree_toward(const Tree& t, VertexId u, VertexId v);

struct InOut {
  VertexId in = 0;
  VertexId out = 0;
};

/// in = the vertex of `u` closest to `v`; out = the next vertex on the path
/// from `in` toward `v`. Throws Error(kNotDisjoint) if the sets overlap.
InOut in_out(std::span<const VertexId> u, std::span<const VertexId> v,
             const Tree& t);
InOut in_out(const Tree& u, const Tree& v, const Tree& t);

/// Edge-list or JSON document (auto-detected on the first non-blank
/// character). Throws Error(kParseError) or Error(kNotATree).
Tree parse_tree(std::string_view text);
Tree parse_edge_list(std::string_view text);
Tree parse_tree_json(std::string_view text);
Tree read_tree_file(const std::string& path);

/// One "u v" line per sorted edge; an order-1 tree is the single line "v".
std::string to_edge_list(const Tree& t);
/// {"edges":[[u,v],...],"vertices":[...]} with sorted arrays.
std::string to_json_text(const Tree& t);

/// Sorted-vector set helpers used throughout.
bool sorted_contains(std::span<const VertexId> sorted, VertexId v);
std::vector<VertexId> sorted_union(std::span<const VertexId> a,
                                   std::span<const VertexId> b);
std::vector<VertexId> sorted_difference(std::span<const VertexId> a,
                                        std::span<const VertexId> b);
std::vector<VertexId> sorted_intersection(std::span<const VertexId> a,
                                          std::span<const VertexId> b);

}  // namespace nulltree
