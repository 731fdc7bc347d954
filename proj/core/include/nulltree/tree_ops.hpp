#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "nulltree/tree.hpp"
#include "nulltree/vertex_vector.hpp"

namespace nulltree {

// ---------------------------------------------------------------------------
// Stellare: hang k_i >= 2 pendant vertices on every vertex i.

/// (base, 0) is the original vertex `base`; (base, w) for w in 1..k_base is
/// its w-th added pendant.
struct StellareLabel {
  VertexId base = 0;
  std::size_t index = 0;
  auto operator<=>(const StellareLabel&) const = default;
};

struct StellareResult {
  Tree tree;
  std::map<StellareLabel, VertexId> label_to_id;
  std::map<VertexId, StellareLabel> id_to_label;

  VertexId id(VertexId base, std::size_t index) const {
    return label_to_id.at(StellareLabel{base, index});
  }
};

/// ks[i] is the pendant count for the i-th smallest vertex of t. Original
/// vertices keep their ids; pendants get max_id + 1, max_id + 2, ... in
/// (base, index) order. Throws Error(kBadArity) / Error(kKTooSmall).
StellareResult stellare(const Tree& t, std::span<const std::size_t> ks);

struct StellareReport {
  std::size_t n = 0;
  std::size_t k_sum = 0;
  Integer k_product = 1;
  std::size_t base_nullity = 0;
  // Each recomputed on the constructed tree.
  std::size_t nullity = 0;
  std::size_t rank = 0;
  std::size_t alpha = 0;
  std::size_t nu = 0;
  Integer m_count = 0;
  std::size_t gamma = 0;
  bool core_is_base = false;
};

/// Builds *T and checks null = sum k - n >= n >= null(T) (both equalities
/// iff n = 1 and k_1 = 2), rank = 2n, alpha = sum k, nu = n, m = prod k,
/// gamma = n and Core(*T) = V(T). Throws Error(kFormulaMismatch).
StellareReport stellare_invariants(const Tree& t, std::span<const std::size_t> ks);

struct StellareBases {
  StellareResult stellare;
  std::vector<VertexVector> null_basis;   // e_(i,1) - e_(i,j), j = 2..k_i
  std::vector<VertexVector> range_basis;  // e_v, e_R(v) for v in V(T)
};

/// Closed-form bases, validated exactly against the kernel and the column
/// space of A(*T). Throws Error(kFormulaMismatch).
StellareBases stellare_bases(const Tree& t, std::span<const std::size_t> ks);

// ---------------------------------------------------------------------------
// S-coalescence: fuse one supported vertex of each S-tree into a new v*.

struct CoalescencePart {
  Tree s_tree;
  VertexId attach = 0;
};

struct CoalescencePlan {
  std::vector<CoalescencePart> parts;
};

struct CoalescenceResult {
  Tree tree;
  VertexId star = 0;
  /// provenance[i] maps the ids of part i to ids of the result (the attach
  /// vertex maps to star).
  std::vector<std::map<VertexId, VertexId>> provenance;
};

/// Ids are kept when the parts are pairwise disjoint; otherwise later parts
/// are shifted past the largest id already used. v* is the largest id + 1.
/// Throws Error(kNotSupported) if an attach vertex is not supported.
CoalescenceResult s_coalescence(const CoalescencePlan& plan);

struct CoalescenceReport {
  std::size_t k = 0;
  std::size_t supp_size = 0;
  std::size_t core_size = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::size_t nu = 0;
  std::size_t alpha = 0;
  Integer m_count = 0;
  Integer m_product = 1;
  /// Strictness of m < prod m(S_i) is required only when at least two
  /// parts have order >= 3; with fewer the coalescence adds no matchings
  /// and the two counts coincide.
  bool strict_m_required = false;
};

/// Checks the nine coalescence identities on the constructed tree.
/// Throws Error(kFormulaMismatch).
CoalescenceReport coalescence_invariants(const CoalescencePlan& plan);

// ---------------------------------------------------------------------------
// Inverse direction.

/// Supported vertices of degree > 1.
std::vector<VertexId> i_supp(const Tree& s);

/// Splits s at v into deg(v) S-trees; the copy of v attached to the i-th
/// smallest neighbor gets id max_id + i. Throws Error(kNotSTree) or
/// Error(kNotInternalSupport); Error(kFormulaMismatch) if a piece fails to
/// be an S-tree.
Forest s_decompose_step(const Tree& s, VertexId v);

/// Repeats s_decompose_step (ascending ids, re-reading ISupp after each
/// split) until no piece has an internal supported vertex.
Forest s_decompose(const Tree& s);

}  // namespace nulltree
