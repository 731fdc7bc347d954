#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nulltree/tree.hpp"
#include "nulltree/vertex_vector.hpp"

namespace nulltree {

/// Dense exact matrix with vertex-labeled rows and columns.
class RationalMatrix {
 public:
  RationalMatrix(std::vector<VertexId> rows, std::vector<VertexId> cols);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  std::span<const VertexId> row_labels() const { return rows_; }
  std::span<const VertexId> col_labels() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_.size() + c];
  }
  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_.size() + c];
  }

  /// The columns as vectors over the row labels.
  std::vector<VertexVector> columns() const;
  /// M * x, where x is indexed by the column labels.
  VertexVector apply(const VertexVector& x) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::vector<VertexId> rows_;
  std::vector<VertexId> cols_;
  std::vector<Rational> data_;
};

RationalMatrix adjacency_matrix(const Tree& t);

/// Matrix whose rows are the given vectors (all over the same domain).
/// Throws Error(kDomainMismatch) when domains differ.
RationalMatrix stack_rows(std::span<const VertexVector> vectors);

struct KernelBasis {
  std::vector<VertexId> domain;
  std::vector<VertexVector> vectors;

  std::size_t nullity() const { return vectors.size(); }
};

/// Reduced-echelon kernel basis: one vector per free column with that column
/// set to 1 and the other free columns 0. Computed by fraction-free integer
/// elimination followed by rational back-substitution.
KernelBasis kernel(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Rank of the span of a list of vectors over a common domain.
std::size_t rank(std::span<const VertexVector> vectors);

/// A(t) * x computed from the adjacency lists (no matrix is formed).
VertexVector apply_adjacency(const Tree& t, const VertexVector& x);
bool in_kernel(const Tree& t, const VertexVector& x);

/// A vector of span(b) whose support is the union of the supports of b's
/// vectors. Vectors are accumulated one at a time, each scaled by the
/// smallest positive integer that cancels no coordinate already nonzero.
/// Throws Error(kEmptyBasis).
VertexVector full_support_vector(const KernelBasis& b);

/// True iff the two lists span the same rational subspace. Empty lists span
/// {0}. Throws Error(kDomainMismatch) on differing domains.
bool span_equal(std::span<const VertexVector> a,
                std::span<const VertexVector> b);

}  // namespace nulltree
