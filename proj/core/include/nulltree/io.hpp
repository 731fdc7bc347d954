#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nulltree/bases.hpp"
#include "nulltree/null_decomposition.hpp"
#include "nulltree/oracle.hpp"
#include "nulltree/tree.hpp"
#include "nulltree/tree_ops.hpp"

namespace nulltree {

// JSON documents. Object keys are sorted and vertex lists ascending, so equal
// inputs serialize byte for byte the same. Every document ends in a newline.

std::string decomposition_json(const NullDecomposition& d);
std::string atoms_json(const AtomSet& atoms);
std::string classification_json(const Classification& c);
std::string invariants_json(const InvariantReport& r);
std::string oracle_json(const OracleReport& r);
std::string stellare_json(const StellareBases& b, const StellareReport& r);
std::string coalescence_json(const CoalescenceResult& c, const CoalescenceReport& r);

/// [[{"coeff":c,"vertex":v},...],...] over the nonzero entries.
std::string vectors_json(std::span<const VertexVector> vectors);
std::string null_basis_json(std::span<const BasicVector> basis);
std::string range_basis_json(const RangeBasis& basis);

/// Header "basic,<v1>,<v2>,..." then one row per basic.
std::string mc_csv(const ForestBasis& fb);

/// Graphviz rendering: supported vertices filled, core vertices double
/// circles, N-parts in dotted clusters, connection edges dashed, bond edges
/// bold.
std::string decomposition_dot(const Tree& t, const NullDecomposition& d,
                              const AtomSet& atoms);

/// {"parts":[{"tree":<tree JSON or edge-list string>,"attach":v},...]}.
/// Throws Error(kParseError) / Error(kNotATree).
CoalescencePlan parse_coalescence_plan(std::string_view text);

std::string role_name(RangeRole role);

}  // namespace nulltree
