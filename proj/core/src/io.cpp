#include "nulltree/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "nulltree/error.hpp"

namespace nulltree {

using nlohmann::json;

namespace {

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

json ids(std::span<const VertexId> vs) { return std::vector<VertexId>(vs.begin(), vs.end()); }

json edges_json(std::span<const Edge> es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

json tree_json(const Tree& t) {
  const std::vector<Edge> es = t.edges();
  return json{{"vertices", ids(t.vertices())}, {"edges", edges_json(es)}};
}

json big(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json coeff(const Rational& q) {
  if (q.get_den() == 1) return big(q.get_num());
  return q.get_str();
}

json vector_json(const VertexVector& x) {
  json out = json::array();
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (sgn(x.at_index(i)) == 0) continue;
    out.push_back({{"vertex", x.domain()[i]}, {"coeff", coeff(x.at_index(i))}});
  }
  return out;
}

template <typename T>
json checked(const CrossChecked<T>& c) {
  if constexpr (std::is_same_v<T, Integer>) {
    return json{{"formula", big(c.formula)}, {"oracle", big(c.oracle)}, {"agrees", c.agrees()}};
  } else {
    return json{{"formula", c.formula}, {"oracle", c.oracle}, {"agrees", c.agrees()}};
  }
}

}  // namespace

std::string decomposition_json(const NullDecomposition& d) {
  json s_parts = json::array();
  for (const Part& p : d.s_parts) {
    json part = tree_json(p.tree);
    part["supp"] = p.supp;
    part["core"] = p.core;
    s_parts.push_back(part);
  }
  json n_parts = json::array();
  for (const Tree& n : d.n_parts) n_parts.push_back(tree_json(n));
  return finish(json{{"supp", d.support.supp},
                     {"core", d.support.core},
                     {"s_parts", s_parts},
                     {"n_parts", n_parts},
                     {"connection_edges", edges_json(d.connection_edges)}});
}

std::string atoms_json(const AtomSet& atoms) {
  json list = json::array();
  for (const Atom& a : atoms.atoms) {
    json atom = tree_json(a.tree);
    atom["supp"] = a.supp;
    atom["core"] = a.core;
    atom["delta_core"] = a.delta_core;
    list.push_back(atom);
  }
  return finish(json{{"atoms", list}, {"bond_edges", edges_json(atoms.bond_edges)}});
}

std::string classification_json(const Classification& c) {
  return finish(json{{"is_s_tree", c.is_s_tree},
                     {"is_n_tree", c.is_n_tree},
                     {"is_s_atom", c.is_s_atom},
                     {"is_s_basic", c.is_s_basic},
                     {"delta_core", c.delta_core},
                     {"nullity", c.nullity},
                     {"supp", c.support.supp},
                     {"core", c.support.core}});
}

std::string invariants_json(const InvariantReport& r) {
  return finish(json{{"supp_size", r.supp_size},
                     {"core_size", r.core_size},
                     {"n_part_vertex_count", r.n_part_vertex_count},
                     {"rank", checked(r.rank)},
                     {"nullity", checked(r.nullity)},
                     {"nu", checked(r.nu)},
                     {"alpha", checked(r.alpha)},
                     {"m", checked(r.m_count)}});
}

std::string oracle_json(const OracleReport& r) {
  json matchings = json::array();
  for (const auto& m : r.matchings) matchings.push_back(edges_json(m));
  return finish(json{{"nu", r.nu},
                     {"maximum_matchings", matchings},
                     {"maximum_independent_sets", r.max_independent_sets},
                     {"minimum_vertex_covers", r.min_vertex_covers},
                     {"minimum_dominating_sets", r.min_dominating_sets}});
}

std::string stellare_json(const StellareBases& b, const StellareReport& r) {
  json labels = json::array();
  for (const auto& [id, label] : b.stellare.id_to_label) {
    labels.push_back({{"id", id}, {"base", label.base}, {"index", label.index}});
  }
  json nb = json::array();
  for (const VertexVector& x : b.null_basis) nb.push_back(vector_json(x));
  json rb = json::array();
  for (const VertexVector& x : b.range_basis) rb.push_back(vector_json(x));
  json report{{"n", r.n},
              {"k_sum", r.k_sum},
              {"k_product", big(r.k_product)},
              {"base_nullity", r.base_nullity},
              {"nullity", r.nullity},
              {"rank", r.rank},
              {"alpha", r.alpha},
              {"nu", r.nu},
              {"m", big(r.m_count)},
              {"gamma", r.gamma},
              {"core_is_base", r.core_is_base}};
  return finish(json{{"tree", tree_json(b.stellare.tree)},
                     {"labels", labels},
                     {"null_basis", nb},
                     {"range_basis", rb},
                     {"invariants", report}});
}

std::string coalescence_json(const CoalescenceResult& c, const CoalescenceReport& r) {
  json provenance = json::array();
  for (const auto& map : c.provenance) {
    json part = json::array();
    for (const auto& [from, to] : map) part.push_back({from, to});
    provenance.push_back(part);
  }
  json report{{"k", r.k},
              {"supp_size", r.supp_size},
              {"core_size", r.core_size},
              {"rank", r.rank},
              {"nullity", r.nullity},
              {"nu", r.nu},
              {"alpha", r.alpha},
              {"m", big(r.m_count)},
              {"m_product", big(r.m_product)},
              {"strict_m_required", r.strict_m_required}};
  return finish(json{{"tree", tree_json(c.tree)},
                     {"star", c.star},
                     {"provenance", provenance},
                     {"invariants", report}});
}

std::string vectors_json(std::span<const VertexVector> vectors) {
  json out = json::array();
  for (const VertexVector& x : vectors) out.push_back(vector_json(x));
  return finish(out);
}

std::string null_basis_json(std::span<const BasicVector> basis) {
  json out = json::array();
  for (const BasicVector& b : basis) out.push_back(vector_json(b.vector));
  return finish(out);
}

std::string role_name(RangeRole role) {
  switch (role) {
    case RangeRole::kCoreSingleton: return "core";
    case RangeRole::kBouquet: return "bouquet";
    case RangeRole::kNPartStandard: return "n_part";
  }
  return "unknown";
}

std::string range_basis_json(const RangeBasis& basis) {
  json out = json::array();
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    out.push_back({{"role", role_name(basis.roles[i])},
                   {"anchor", basis.anchors[i]},
                   {"vector", vector_json(basis.vectors[i])}});
  }
  return finish(out);
}

std::string mc_csv(const ForestBasis& fb) {
  std::ostringstream out;
  out << "basic";
  for (VertexId v : fb.columns) out << ',' << v;
  out << '\n';
  for (std::size_t r = 0; r < fb.mc.size(); ++r) {
    out << r;
    for (int x : fb.mc[r]) out << ',' << x;
    out << '\n';
  }
  return out.str();
}

std::string decomposition_dot(const Tree& t, const NullDecomposition& d,
                              const AtomSet& atoms) {
  std::ostringstream out;
  out << "graph T {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < d.n_parts.size(); ++i) {
    out << "  subgraph cluster_n" << i << " {\n    style=dotted;\n";
    for (VertexId v : d.n_parts[i].vertices()) out << "    " << v << ";\n";
    out << "  }\n";
  }
  for (VertexId v : t.vertices()) {
    out << "  " << v;
    if (sorted_contains(d.support.supp, v)) {
      out << " [style=filled, fillcolor=gray80]";
    } else if (sorted_contains(d.support.core, v)) {
      out << " [shape=doublecircle]";
    }
    out << ";\n";
  }
  for (const Edge& e : t.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (std::binary_search(d.connection_edges.begin(), d.connection_edges.end(), e)) {
      out << " [style=dashed]";
    } else if (std::binary_search(atoms.bond_edges.begin(), atoms.bond_edges.end(), e)) {
      out << " [style=bold]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

CoalescencePlan parse_coalescence_plan(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  CoalescencePlan plan;
  try {
    for (const json& part : doc.at("parts")) {
      const json& tree = part.at("tree");
      Tree t = tree.is_string() ? parse_tree(tree.get<std::string>()) : parse_tree_json(tree.dump());
      plan.parts.push_back(CoalescencePart{std::move(t), part.at("attach").get<VertexId>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return plan;
}

}  // namespace nulltree
