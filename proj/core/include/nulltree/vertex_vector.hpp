#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "nulltree/tree.hpp"

namespace nulltree {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact vector indexed by the vertices of a tree (or any sorted vertex
/// list). Entries outside the domain do not exist; entries inside it default
/// to zero.
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(std::vector<VertexId> domain);
  explicit VertexVector(const Tree& t)
      : VertexVector(std::vector<VertexId>(t.vertices().begin(),
                                           t.vertices().end())) {}

  /// e_v over the vertices of t.
  static VertexVector unit(const Tree& t, VertexId v);
  /// e_U = sum of e_u for u in U.
  static VertexVector indicator(const Tree& t, std::span<const VertexId> u);

  std::span<const VertexId> domain() const { return domain_; }
  std::span<const Rational> entries() const { return entries_; }
  std::size_t dimension() const { return domain_.size(); }

  bool has(VertexId v) const;
  /// Throws Error(kVertexNotFound) outside the domain.
  const Rational& operator[](VertexId v) const;
  void set(VertexId v, const Rational& value);
  const Rational& at_index(std::size_t i) const { return entries_[i]; }
  void set_index(std::size_t i, const Rational& value) { entries_[i] = value; }

  /// Sorted vertices with a nonzero entry.
  std::vector<VertexId> support() const;
  bool is_zero() const;
  /// True when every entry is -1, 0 or 1.
  bool is_signed_unit() const;

  VertexVector& operator+=(const VertexVector& other);
  VertexVector& operator-=(const VertexVector& other);
  VertexVector& operator*=(const Rational& scale);
  friend VertexVector operator+(VertexVector a, const VertexVector& b) {
    return a += b;
  }
  friend VertexVector operator-(VertexVector a, const VertexVector& b) {
    return a -= b;
  }
  friend VertexVector operator*(VertexVector a, const Rational& s) {
    return a *= s;
  }

  bool operator==(const VertexVector& other) const = default;

  /// "(v:c, ...)" over the nonzero entries; for diagnostics.
  std::string debug_string() const;

 private:
  std::size_t index_of(VertexId v) const;

  std::vector<VertexId> domain_;
  std::vector<Rational> entries_;
};

/// Keeps the coordinates of V(s). Throws Error(kDomainMismatch) if s has a
/// vertex outside the domain of x.
VertexVector restrict_to(const VertexVector& x, const Tree& s);
/// Extends x by zeros to the vertices of g. Throws Error(kDomainMismatch)
/// if the domain of x is not a subset of V(g).
VertexVector lift(const VertexVector& x, const Tree& g);

}  // namespace nulltree
