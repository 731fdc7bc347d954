#include "nulltree/exact_linalg.hpp"

#include <algorithm>

#include "nulltree/error.hpp"

namespace nulltree {

namespace {

using IntRow = std::vector<Integer>;

struct Echelon {
  std::vector<IntRow> rows;  // first `pivots.size()` rows are nonzero
  std::vector<std::size_t> pivots;
};

// Scales a rational row by the lcm of its denominators.
IntRow integer_row(std::span<const Rational> row) {
  Integer den = 1;
  for (const Rational& q : row) {
    if (q.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = row[j].get_num() * (den / row[j].get_den());
  }
  return out;
}

// Fraction-free (Bareiss) row echelon form. Every division is exact: the
// updated entries are minors of the input.
Echelon fraction_free_echelon(std::vector<IntRow> m, std::size_t cols) {
  Echelon e;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Integer& piv = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) {
        // Still needs the scaling so later divisions stay exact.
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (sgn(m[i][j]) == 0) continue;
          m[i][j] *= piv;
          mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = piv * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

Echelon echelon_of(const RationalMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.row_count());
  std::vector<Rational> buf(m.col_count());
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    for (std::size_t c = 0; c < m.col_count(); ++c) buf[c] = m(r, c);
    rows.push_back(integer_row(buf));
  }
  return fraction_free_echelon(std::move(rows), m.col_count());
}

}  // namespace

RationalMatrix::RationalMatrix(std::vector<VertexId> rows,
                               std::vector<VertexId> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  data_.assign(rows_.size() * cols_.size(), Rational(0));
}

std::vector<VertexVector> RationalMatrix::columns() const {
  std::vector<VertexVector> out;
  out.reserve(cols_.size());
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    VertexVector col(rows_);
    for (std::size_t r = 0; r < rows_.size(); ++r) col.set_index(r, (*this)(r, c));
    out.push_back(std::move(col));
  }
  return out;
}

VertexVector RationalMatrix::apply(const VertexVector& x) const {
  if (!std::ranges::equal(x.domain(), cols_)) {
    throw Error(ErrorCode::kDomainMismatch, "matrix-vector product domains differ");
  }
  VertexVector out(rows_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * x.at_index(c);
    }
    out.set_index(r, acc);
  }
  return out;
}

RationalMatrix adjacency_matrix(const Tree& t) {
  std::vector<VertexId> labels(t.vertices().begin(), t.vertices().end());
  RationalMatrix m(labels, labels);
  for (std::size_t i = 0; i < t.order(); ++i) {
    for (std::size_t j : t.neighbor_indices(i)) m(i, j) = 1;
  }
  return m;
}

RationalMatrix stack_rows(std::span<const VertexVector> vectors) {
  if (vectors.empty()) return RationalMatrix({}, {});
  std::vector<VertexId> domain(vectors[0].domain().begin(),
                               vectors[0].domain().end());
  std::vector<VertexId> row_labels;
  for (std::size_t i = 0; i < vectors.size(); ++i) row_labels.push_back(i);
  RationalMatrix m(row_labels, domain);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!std::ranges::equal(vectors[i].domain(), domain)) {
      throw Error(ErrorCode::kDomainMismatch, "stacked vectors over different domains");
    }
    for (std::size_t c = 0; c < domain.size(); ++c) m(i, c) = vectors[i].at_index(c);
  }
  return m;
}

KernelBasis kernel(const RationalMatrix& m) {
  Echelon e = echelon_of(m);
  const std::size_t n = m.col_count();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : e.pivots) is_pivot[c] = 1;

  KernelBasis out;
  out.domain.assign(m.col_labels().begin(), m.col_labels().end());
  std::vector<Rational> x(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::fill(x.begin(), x.end(), Rational(0));
    x[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const std::size_t p = e.pivots[k];
      Rational s = 0;
      for (std::size_t j = p + 1; j < n; ++j) {
        if (sgn(e.rows[k][j]) != 0 && sgn(x[j]) != 0) s += Rational(e.rows[k][j]) * x[j];
      }
      x[p] = -s / Rational(e.rows[k][p]);
    }
    VertexVector v(out.domain);
    for (std::size_t j = 0; j < n; ++j) v.set_index(j, x[j]);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return echelon_of(m).pivots.size(); }

std::size_t rank(std::span<const VertexVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(stack_rows(vectors));
}

VertexVector apply_adjacency(const Tree& t, const VertexVector& x) {
  if (!std::ranges::equal(x.domain(), t.vertices())) {
    throw Error(ErrorCode::kDomainMismatch, "vector is not indexed by the tree");
  }
  VertexVector out(t);
  for (std::size_t i = 0; i < t.order(); ++i) {
    Rational acc = 0;
    for (std::size_t j : t.neighbor_indices(i)) acc += x.at_index(j);
    out.set_index(i, acc);
  }
  return out;
}

bool in_kernel(const Tree& t, const VertexVector& x) {
  return apply_adjacency(t, x).is_zero();
}

VertexVector full_support_vector(const KernelBasis& b) {
  if (b.vectors.empty()) {
    throw Error(ErrorCode::kEmptyBasis, "full_support_vector of an empty basis");
  }
  VertexVector acc = b.vectors.front();
  for (std::size_t k = 1; k < b.vectors.size(); ++k) {
    const VertexVector& y = b.vectors[k];
    // acc_i + t*y_i vanishes only for t = -acc_i/y_i; skip those t.
    std::vector<Rational> forbidden;
    for (std::size_t i = 0; i < acc.dimension(); ++i) {
      if (sgn(acc.at_index(i)) != 0 && sgn(y.at_index(i)) != 0) {
        forbidden.push_back(-acc.at_index(i) / y.at_index(i));
      }
    }
    Integer t = 1;
    while (std::find(forbidden.begin(), forbidden.end(), Rational(t)) != forbidden.end()) {
      ++t;
    }
    acc += y * Rational(t);
  }
  return acc;
}

bool span_equal(std::span<const VertexVector> a,
                std::span<const VertexVector> b) {
  if (!a.empty() && !b.empty() &&
      !std::ranges::equal(a.front().domain(), b.front().domain())) {
    throw Error(ErrorCode::kDomainMismatch, "span_equal over different domains");
  }
  std::vector<VertexVector> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  return ra == rb && rank(both) == ra;
}

}  // namespace nulltree
