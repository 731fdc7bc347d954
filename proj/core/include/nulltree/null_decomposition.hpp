#pragma once

#include <cstddef>
#include <vector>

#include "nulltree/tree.hpp"
#include "nulltree/vertex_vector.hpp"

namespace nulltree {

/// Supp(T): vertices where some null vector of A(T) is nonzero.
/// Core(T) = N(Supp(T)); the two sets are disjoint for trees.
struct SupportCore {
  std::vector<VertexId> supp;
  std::vector<VertexId> core;
};

/// Support read off an exact kernel basis of A(t).
SupportCore support_core(const Tree& t);

/// A component of the S-forest or the A-forest together with its own
/// support and core.
struct Part {
  Tree tree;
  std::vector<VertexId> supp;
  std::vector<VertexId> core;
};

struct NullDecomposition {
  SupportCore support;
  std::vector<Part> s_parts;             // F_S, ordered by smallest vertex
  Forest n_parts;                        // F_N, ordered by smallest vertex
  std::vector<Edge> connection_edges;    // Conn(T), sorted

  std::size_t n_part_vertex_count() const;
};

NullDecomposition decompose(const Tree& t);

struct Atom {
  Tree tree;
  std::vector<VertexId> supp;
  std::vector<VertexId> core;
  std::size_t delta_core = 0;
};

struct AtomSet {
  std::vector<Atom> atoms;        // F_A over all S-parts, by smallest vertex
  std::vector<Edge> bond_edges;   // Bond(T), sorted
};

/// Deletes core-core edges inside every S-part; the remaining components are
/// the S-atoms. Per-atom support and core are the restrictions of the
/// part's.
AtomSet a_set(const NullDecomposition& d);
AtomSet a_set(const Tree& t);

/// R(v): supported neighbors of the core vertex v.
/// Throws Error(kNotCoreVertex).
std::vector<VertexId> bouquet(const Tree& t, const SupportCore& sc, VertexId v);
std::vector<VertexId> bouquet(const Tree& t, VertexId v);

/// Largest degree among `core` (0 when core is empty).
std::size_t max_core_degree(const Tree& t, const std::vector<VertexId>& core);

struct Classification {
  bool is_s_tree = false;
  bool is_n_tree = false;
  bool is_s_atom = false;
  bool is_s_basic = false;
  std::size_t delta_core = 0;
  std::size_t nullity = 0;
  SupportCore support;
};

/// The order-1 tree is an S-tree and an S-atom with empty core, delta_core 0
/// and is not S-basic.
Classification classify(const Tree& t);

/// A value computed by a closed-form formula next to the same value computed
/// independently.
template <typename T>
struct CrossChecked {
  T formula{};
  T oracle{};
  bool agrees() const { return formula == oracle; }
};

struct InvariantReport {
  std::size_t supp_size = 0;
  std::size_t core_size = 0;
  std::size_t n_part_vertex_count = 0;
  CrossChecked<std::size_t> rank;     // 2 core + v(F_N)   vs exact rank
  CrossChecked<std::size_t> nullity;  // supp - core       vs exact nullity
  CrossChecked<std::size_t> nu;       // core + v(F_N)/2   vs matching DP
  CrossChecked<std::size_t> alpha;    // supp + v(F_N)/2   vs independence DP
  CrossChecked<Integer> m_count;      // product over atoms vs whole-tree DP
};

/// Every field by formula and by oracle. Throws Error(kFormulaMismatch) if
/// any pair disagrees, or if nu != alpha - nullity.
InvariantReport invariant_report(const Tree& t);

}  // namespace nulltree
