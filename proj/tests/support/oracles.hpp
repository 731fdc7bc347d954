#pragma once

// Slow, independent reference computations used by the tests. Nothing here
// calls the library's elimination, matching or decomposition code.

#include <cstddef>
#include <string>
#include <vector>

#include "nulltree/tree.hpp"
#include "nulltree/vertex_vector.hpp"

namespace oracle {

using nulltree::Edge;
using nulltree::Tree;
using nulltree::VertexId;
using nulltree::VertexVector;

using Row = std::vector<mpq_class>;
using Matrix = std::vector<Row>;

/// Plain Gauss-Jordan over the rationals.
std::size_t rank(Matrix m);
/// Null space basis of m (columns = m[0].size()), one vector per free column.
Matrix null_space(Matrix m, std::size_t cols);

Matrix adjacency(const Tree& t);
std::size_t rank(const Tree& t);
std::size_t nullity(const Tree& t);

Row dense(const VertexVector& x);
Matrix dense(const std::vector<VertexVector>& xs);
/// Same row space.
bool same_span(const Matrix& a, const Matrix& b);
bool same_span(const std::vector<VertexVector>& a, const Matrix& b);
/// A x computed entry by entry from the edge list.
bool annihilated(const Tree& t, const VertexVector& x);

/// Vertices where some vector of the exact null space is nonzero.
std::vector<VertexId> support(const Tree& t);
/// N(support).
std::vector<VertexId> core(const Tree& t);

/// Edge-subset enumeration.
struct Matchings {
  std::size_t nu = 0;
  std::size_t count = 0;
  std::vector<std::vector<Edge>> maximum;
};
Matchings matchings(const Tree& t);
/// Vertex-subset enumeration.
std::size_t independence_number(const Tree& t);
std::size_t domination_number(const Tree& t);

std::vector<std::size_t> bfs(const Tree& t, VertexId from);

/// Unlabeled equality by center-rooted AHU encodings.
bool isomorphic(const Tree& a, const Tree& b);

Tree load_fixture(const std::string& name);
std::string fixture_path(const std::string& name);

}  // namespace oracle
