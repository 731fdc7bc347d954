#include "nulltree/null_decomposition.hpp"

#include <algorithm>

#include "nulltree/error.hpp"
#include "nulltree/exact_linalg.hpp"
#include "nulltree/matching.hpp"

namespace nulltree {

namespace {

std::vector<VertexId> neighborhood(const Tree& t,
                                   const std::vector<VertexId>& set) {
  std::vector<VertexId> out;
  for (VertexId v : set) {
    for (std::size_t j : t.neighbor_indices(t.index_of(v))) {
      out.push_back(t.vertex(j));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> restricted(const std::vector<VertexId>& set,
                                 const Tree& part) {
  return sorted_intersection(set, part.vertices());
}

}  // namespace

SupportCore support_core(const Tree& t) {
  KernelBasis k = kernel(adjacency_matrix(t));
  std::vector<char> nonzero(t.order(), 0);
  for (const VertexVector& x : k.vectors) {
    for (std::size_t i = 0; i < x.dimension(); ++i) {
      if (sgn(x.at_index(i)) != 0) nonzero[i] = 1;
    }
  }
  SupportCore sc;
  for (std::size_t i = 0; i < t.order(); ++i) {
    if (nonzero[i]) sc.supp.push_back(t.vertex(i));
  }
  sc.core = neighborhood(t, sc.supp);
  return sc;
}

std::size_t NullDecomposition::n_part_vertex_count() const {
  std::size_t total = 0;
  for (const Tree& n : n_parts) total += n.order();
  return total;
}

NullDecomposition decompose(const Tree& t) {
  NullDecomposition d;
  d.support = support_core(t);
  const std::vector<VertexId> closed = sorted_union(d.support.supp, d.support.core);
  Forest s_forest = induced_forest(t, closed);
  for (Tree& s : s_forest) {
    Part p{std::move(s), {}, {}};
    p.supp = restricted(d.support.supp, p.tree);
    p.core = restricted(d.support.core, p.tree);
    d.s_parts.push_back(std::move(p));
  }
  d.n_parts = split(
      t, [&](VertexId v) { return !sorted_contains(closed, v); },
      [](const Edge&) { return true; });
  for (const Edge& e : t.edges()) {
    if (sorted_contains(closed, e.u) != sorted_contains(closed, e.v)) {
      d.connection_edges.push_back(e);
    }
  }
  return d;
}

AtomSet a_set(const NullDecomposition& d) {
  AtomSet out;
  for (const Part& part : d.s_parts) {
    auto is_core = [&](VertexId v) { return sorted_contains(part.core, v); };
    Forest atoms = split(
        part.tree, [](VertexId) { return true; },
        [&](const Edge& e) { return !(is_core(e.u) && is_core(e.v)); });
    for (const Edge& e : part.tree.edges()) {
      if (is_core(e.u) && is_core(e.v)) out.bond_edges.push_back(e);
    }
    for (Tree& a : atoms) {
      Atom atom{std::move(a), {}, {}, 0};
      atom.supp = restricted(part.supp, atom.tree);
      atom.core = restricted(part.core, atom.tree);
      atom.delta_core = max_core_degree(atom.tree, atom.core);
      out.atoms.push_back(std::move(atom));
    }
  }
  std::sort(out.atoms.begin(), out.atoms.end(), [](const Atom& a, const Atom& b) {
    return a.tree.vertex(0) < b.tree.vertex(0);
  });
  std::sort(out.bond_edges.begin(), out.bond_edges.end());
  return out;
}

AtomSet a_set(const Tree& t) { return a_set(decompose(t)); }

std::vector<VertexId> bouquet(const Tree& t, const SupportCore& sc, VertexId v) {
  if (!sorted_contains(sc.core, v)) {
    throw Error(ErrorCode::kNotCoreVertex, "vertex " + std::to_string(v));
  }
  std::vector<VertexId> out;
  for (VertexId u : t.neighbors(v)) {
    if (sorted_contains(sc.supp, u)) out.push_back(u);
  }
  return out;
}

std::vector<VertexId> bouquet(const Tree& t, VertexId v) {
  t.index_of(v);
  return bouquet(t, support_core(t), v);
}

std::size_t max_core_degree(const Tree& t, const std::vector<VertexId>& core) {
  std::size_t best = 0;
  for (VertexId v : core) best = std::max(best, t.degree(v));
  return best;
}

Classification classify(const Tree& t) {
  Classification c;
  c.support = support_core(t);
  c.nullity = c.support.supp.size() - c.support.core.size();
  c.is_s_tree = c.support.supp.size() + c.support.core.size() == t.order();
  c.is_n_tree = c.support.supp.empty();
  c.delta_core = max_core_degree(t, c.support.core);
  if (c.is_s_tree) {
    const std::vector<Edge> edges = t.edges();
    c.is_s_atom = std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
      return sorted_contains(c.support.core, e.u) &&
             sorted_contains(c.support.core, e.v);
    });
  }
  c.is_s_basic = c.is_s_atom && c.delta_core == 2;
  return c;
}

InvariantReport invariant_report(const Tree& t) {
  const NullDecomposition d = decompose(t);
  const AtomSet atoms = a_set(d);
  InvariantReport r;
  r.supp_size = d.support.supp.size();
  r.core_size = d.support.core.size();
  r.n_part_vertex_count = d.n_part_vertex_count();

  const std::size_t exact_rank = rank(adjacency_matrix(t));
  r.rank = {2 * r.core_size + r.n_part_vertex_count, exact_rank};
  r.nullity = {r.supp_size - r.core_size, t.order() - exact_rank};
  r.nu = {r.core_size + r.n_part_vertex_count / 2, nu(t)};
  r.alpha = {r.supp_size + r.n_part_vertex_count / 2, alpha(t)};
  Integer product = 1;
  for (const Atom& a : atoms.atoms) product *= count_max_matchings(a.tree);
  r.m_count = {product, count_max_matchings(t)};

  auto fail = [&](const char* what, const std::string& formula,
                  const std::string& oracle) {
    throw Error(ErrorCode::kFormulaMismatch,
                std::string(what) + ": formula " + formula + " vs oracle " + oracle);
  };
  if (!r.rank.agrees()) fail("rank", std::to_string(r.rank.formula), std::to_string(r.rank.oracle));
  if (!r.nullity.agrees()) {
    fail("nullity", std::to_string(r.nullity.formula), std::to_string(r.nullity.oracle));
  }
  if (!r.nu.agrees()) fail("nu", std::to_string(r.nu.formula), std::to_string(r.nu.oracle));
  if (!r.alpha.agrees()) {
    fail("alpha", std::to_string(r.alpha.formula), std::to_string(r.alpha.oracle));
  }
  if (!r.m_count.agrees()) fail("m", r.m_count.formula.get_str(), r.m_count.oracle.get_str());
  if (r.nu.oracle + r.nullity.oracle != r.alpha.oracle) {
    fail("nu = alpha - nullity", std::to_string(r.nu.oracle),
         std::to_string(r.alpha.oracle) + " - " + std::to_string(r.nullity.oracle));
  }
  return r;
}

}  // namespace nulltree
