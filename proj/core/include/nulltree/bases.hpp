#pragma once

#include <cstddef>
#include <vector>

#include "nulltree/null_decomposition.hpp"
#include "nulltree/tree.hpp"
#include "nulltree/vertex_vector.hpp"

namespace nulltree {

/// How the S-basic subtree algorithm picks among fresh neighbors.
enum class ChoiceRule {
  kSmallestId,
  /// Prefer a neighbor adjacent to a core vertex not yet in the subtree,
  /// falling back to the smallest id.
  kPreferUncoveredCore,
};

struct SBasicSubtree {
  Tree tree;
  VertexId host = 0;     // smallest vertex of the host atom
  VertexId pendant = 0;  // smallest pendant supported vertex of `tree`
};

/// Grows an S-basic subtree of `atom` from v. Throws Error(kNotAtom),
/// Error(kTooSmall), Error(kVertexNotFound) or Error(kValidationFailed).
SBasicSubtree sbsa(const Tree& atom, VertexId v,
                   ChoiceRule rule = ChoiceRule::kSmallestId);

struct BasicVector {
  VertexVector vector;  // over V(host atom)
  SBasicSubtree source;
};

/// Entry (-1)^(d(v,h)/2) at vertices at even distance from the pendant h,
/// zero elsewhere, extended by zeros to the host. Throws
/// Error(kValidationFailed) unless A(host) x = 0.
BasicVector basic_vector(const SBasicSubtree& b, const Tree& host);

struct ForestBasis {
  std::vector<SBasicSubtree> basics;
  std::vector<VertexId> columns;        // V(atom)
  std::vector<std::vector<int>> mc;     // one row per basic, entries -1/0/1
  std::vector<BasicVector> vectors;     // in emission order
};

/// Forest basis of an S-atom. Throws Error(kNotAtom), Error(kValidationFailed)
/// or Error(kSpanMismatch).
ForestBasis s_basis_forest(const Tree& atom);

enum class RangeRole { kCoreSingleton, kBouquet, kNPartStandard };

struct RangeBasis {
  std::vector<VertexVector> vectors;
  std::vector<RangeRole> roles;
  /// The vertex each vector belongs to: the core vertex v for e_v and
  /// e_R(v), the vertex u for e_u.
  std::vector<VertexId> anchors;
};

/// { e_v, e_R(v) : v in Core(atom) }, cores ascending. Throws
/// Error(kNotAtom) or Error(kSpanMismatch).
RangeBasis atom_range_basis(const Tree& atom);

/// Union of the forest bases of all atoms, lifted to t and ordered by
/// smallest supported vertex. Throws Error(kSpanMismatch) if the result does
/// not span the exact kernel.
std::vector<BasicVector> tree_null_basis(const Tree& t);

/// Atom range bases (atoms by smallest vertex) followed by e_u for every
/// N-part vertex u. Throws Error(kSpanMismatch).
RangeBasis tree_range_basis(const Tree& t);

}  // namespace nulltree
