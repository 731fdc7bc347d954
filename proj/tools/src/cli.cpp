#include "nulltree_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nulltree/bases.hpp"
#include "nulltree/error.hpp"
#include "nulltree/exact_linalg.hpp"
#include "nulltree/generators.hpp"
#include "nulltree/io.hpp"
#include "nulltree/null_decomposition.hpp"
#include "nulltree/tree_ops.hpp"
#include "nulltree/verify.hpp"

namespace nulltree::cli {

namespace {

struct Options {
  std::string input;
  std::string format;
  std::string ks;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t exhaustive_n = 0;
  bool fixtures = false;
};

std::string read_input(const Options& o, std::istream& in) {
  if (o.input.empty()) throw Error(ErrorCode::kParseError, "no input given");
  std::stringstream buffer;
  if (o.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(o.input);
    if (!file) throw Error(ErrorCode::kParseError, "cannot open " + o.input);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::string list_text(std::span<const VertexId> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string edges_text(std::span<const Edge> es) {
  std::string out;
  for (const Edge& e : es) {
    if (!out.empty()) out += " ";
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out.empty() ? "-" : out;
}

std::string vector_text(const VertexVector& x) {
  std::string out;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    const Rational& q = x.at_index(i);
    if (sgn(q) == 0) continue;
    const std::string v = "e" + std::to_string(x.domain()[i]);
    if (out.empty()) {
      out = q == 1 ? v : q == -1 ? "-" + v : q.get_str() + "*" + v;
    } else {
      out += sgn(q) > 0 ? " + " : " - ";
      const Rational mag = abs(q);
      out += mag == 1 ? v : mag.get_str() + "*" + v;
    }
  }
  return out.empty() ? "0" : out;
}

void unsupported(const std::string& format, const std::string& command) {
  throw Error(ErrorCode::kParseError, "format '" + format + "' is not available for " + command);
}

std::vector<std::size_t> parse_ks(const std::string& text) {
  std::vector<std::size_t> ks;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long k = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ks.push_back(static_cast<std::size_t>(k));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError, "bad --ks entry '" + item + "'");
    }
  }
  return ks;
}

int decompose_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const Tree t = parse_tree(read_input(o, in));
  const NullDecomposition d = decompose(t);
  if (o.format == "json") {
    out << decomposition_json(d);
  } else if (o.format == "dot") {
    out << decomposition_dot(t, d, a_set(d));
  } else {
    out << "supp " << list_text(d.support.supp) << "\n";
    out << "core " << list_text(d.support.core) << "\n";
    for (const Part& p : d.s_parts) out << "s-part " << list_text(p.tree.vertices()) << "\n";
    for (const Tree& n : d.n_parts) out << "n-part " << list_text(n.vertices()) << "\n";
    out << "connection " << edges_text(d.connection_edges) << "\n";
  }
  return 0;
}

int atoms_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const Tree t = parse_tree(read_input(o, in));
  const NullDecomposition d = decompose(t);
  const AtomSet atoms = a_set(d);
  if (o.format == "json") {
    out << atoms_json(atoms);
  } else if (o.format == "dot") {
    out << decomposition_dot(t, d, atoms);
  } else {
    for (const Atom& a : atoms.atoms) {
      out << "atom " << list_text(a.tree.vertices()) << " supp " << list_text(a.supp)
          << " core " << list_text(a.core) << " delta_core " << a.delta_core << "\n";
    }
    out << "bond " << edges_text(atoms.bond_edges) << "\n";
  }
  return 0;
}

int null_basis_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const Tree t = parse_tree(read_input(o, in));
  const std::vector<BasicVector> basis = tree_null_basis(t);
  if (o.format == "json") {
    out << null_basis_json(basis);
  } else if (o.format == "text") {
    for (const BasicVector& b : basis) out << vector_text(b.vector) << "\n";
  } else {
    unsupported(o.format, "null-basis");
  }
  return 0;
}

int range_basis_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const Tree t = parse_tree(read_input(o, in));
  const RangeBasis r = tree_range_basis(t);
  if (o.format == "json") {
    out << range_basis_json(r);
  } else if (o.format == "text") {
    for (std::size_t i = 0; i < r.vectors.size(); ++i) {
      out << role_name(r.roles[i]) << " " << r.anchors[i] << ": " << vector_text(r.vectors[i])
          << "\n";
    }
  } else {
    unsupported(o.format, "range-basis");
  }
  return 0;
}

int invariants_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const Tree t = parse_tree(read_input(o, in));
  const InvariantReport r = invariant_report(t);
  if (o.format == "json") {
    out << invariants_json(r);
  } else if (o.format == "text") {
    out << "supp " << r.supp_size << "\ncore " << r.core_size << "\nn_part_vertices "
        << r.n_part_vertex_count << "\nrank " << r.rank.oracle << "\nnullity " << r.nullity.oracle
        << "\nnu " << r.nu.oracle << "\nalpha " << r.alpha.oracle << "\nm "
        << r.m_count.oracle.get_str() << "\n";
  } else {
    unsupported(o.format, "invariants");
  }
  return 0;
}

int stellare_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const Tree t = parse_tree(read_input(o, in));
  const std::vector<std::size_t> ks = parse_ks(o.ks);
  const StellareReport r = stellare_invariants(t, ks);
  const StellareBases b = stellare_bases(t, ks);
  if (o.format == "json") {
    out << stellare_json(b, r);
  } else if (o.format == "text") {
    out << to_edge_list(b.stellare.tree);
  } else {
    unsupported(o.format, "stellare");
  }
  return 0;
}

int coalesce_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const CoalescencePlan plan = parse_coalescence_plan(read_input(o, in));
  const CoalescenceReport r = coalescence_invariants(plan);
  const CoalescenceResult c = s_coalescence(plan);
  if (o.format == "json") {
    out << coalescence_json(c, r);
  } else if (o.format == "text") {
    out << to_edge_list(c.tree);
  } else {
    unsupported(o.format, "coalesce");
  }
  return 0;
}

int classify_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const Tree t = parse_tree(read_input(o, in));
  const Classification c = classify(t);
  if (o.format == "json") {
    out << classification_json(c);
  } else if (o.format == "text") {
    out << std::boolalpha << "is_s_tree " << c.is_s_tree << "\nis_n_tree " << c.is_n_tree
        << "\nis_s_atom " << c.is_s_atom << "\nis_s_basic " << c.is_s_basic << "\ndelta_core "
        << c.delta_core << "\nnullity " << c.nullity << "\n";
  } else {
    unsupported(o.format, "classify");
  }
  return 0;
}

int verify_cmd(const Options& o, std::ostream& out) {
  std::vector<CheckResult> results;
  std::size_t trees = 0;
  if (o.exhaustive_n > 0) {
    PropertySuite suite;
    for (std::size_t n = 1; n <= o.exhaustive_n; ++n) {
      enumerate_trees(n, [&](const Tree& t) { suite.check(t); });
    }
    for (const Tree& t : {fixture_e1(), fixture_e2(), fixture_e3()}) suite.check(t);
    trees = suite.trees();
    results = suite.results();
  }
  if (o.fixtures || o.exhaustive_n == 0) {
    const std::vector<CheckResult> f = verify_fixtures();
    results.insert(results.end(), f.begin(), f.end());
  }
  bool ok = true;
  for (const CheckResult& r : results) ok &= r.ok();
  if (o.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const CheckResult& r : results) {
      doc.push_back({{"name", r.name},
                     {"passed", r.passed},
                     {"failed", r.failed},
                     {"first_failure", r.first_failure}});
    }
    out << nlohmann::json{{"trees", trees}, {"ok", ok}, {"checks", doc}}.dump(2) << "\n";
  } else if (o.format == "text") {
    if (trees > 0) out << trees << " trees\n";
    out << format_results(results);
  } else {
    unsupported(o.format, "verify");
  }
  return ok ? 0 : 2;
}

int random_cmd(const Options& o, std::ostream& out) {
  const Tree t = random_tree(o.n, o.seed);
  if (o.format == "json") {
    out << to_json_text(t) << "\n";
  } else if (o.format == "text") {
    out << to_edge_list(t);
  } else {
    unsupported(o.format, "random");
  }
  return 0;
}

int enumerate_cmd(const Options& o, std::ostream& out) {
  if (o.format != "json" && o.format != "text") unsupported(o.format, "enumerate");
  const bool json = o.format == "json";
  bool first = true;
  if (json) out << "[";
  enumerate_trees(o.n, [&](const Tree& t) {
    if (json) {
      out << (first ? "\n" : ",\n") << to_json_text(t);
    } else {
      if (!first) out << "\n";
      out << to_edge_list(t);
    }
    first = false;
  });
  if (json) out << "\n]\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Null decompositions and {-1,0,1} bases of tree adjacency matrices", "nulltree"};
  app.require_subcommand(1);
  Options o;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("path", o.input, "Tree file (edge list or JSON), '-' for stdin");
    sub->add_option("-i,--input", o.input, "Tree file (edge list or JSON), '-' for stdin");
    return sub;
  };
  auto with_format = [&](CLI::App* sub, const std::string& fallback,
                         std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(allowed))
        ->default_str(fallback);
    return sub;
  };

  auto* decompose_app = with_input(app.add_subcommand("decompose", "Null decomposition"));
  with_format(decompose_app, "json", {"json", "dot", "text"});
  auto* atoms_app = with_input(app.add_subcommand("atoms", "S-atoms and bond edges"));
  with_format(atoms_app, "json", {"json", "dot", "text"});
  auto* null_app = with_input(app.add_subcommand("null-basis", "{-1,0,1} null space basis"));
  with_format(null_app, "json", {"json", "dot", "text"});
  auto* range_app = with_input(app.add_subcommand("range-basis", "{0,1} range basis"));
  with_format(range_app, "json", {"json", "dot", "text"});
  auto* inv_app = with_input(app.add_subcommand("invariants", "Cross-checked invariants"));
  with_format(inv_app, "json", {"json", "dot", "text"});
  auto* stel_app = with_input(app.add_subcommand("stellare", "Stellare of a tree"));
  stel_app->add_option("--ks", o.ks, "Comma-separated pendant counts")->required();
  with_format(stel_app, "json", {"json", "dot", "text"});
  auto* coal_app = with_input(app.add_subcommand("coalesce", "S-coalescence of a plan"));
  with_format(coal_app, "json", {"json", "dot", "text"});
  auto* class_app = with_input(app.add_subcommand("classify", "S-tree / N-tree / atom flags"));
  with_format(class_app, "json", {"json", "dot", "text"});
  auto* verify_app = app.add_subcommand("verify", "Property suite and worked examples");
  verify_app->add_option("--exhaustive-n", o.exhaustive_n, "Check every labeled tree up to K");
  verify_app->add_flag("--fixtures", o.fixtures, "Reproduce the E1/E2 numbers");
  with_format(verify_app, "text", {"json", "dot", "text"});
  auto* random_app = app.add_subcommand("random", "Random labeled tree");
  random_app->add_option("--n", o.n, "Order")->required()->check(CLI::PositiveNumber);
  random_app->add_option("--seed", o.seed, "Seed");
  with_format(random_app, "text", {"json", "dot", "text"});
  auto* enum_app = app.add_subcommand("enumerate", "All labeled trees of order n");
  enum_app->add_option("--n", o.n, "Order")->required()->check(CLI::Range(1, 12));
  with_format(enum_app, "text", {"json", "dot", "text"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (o.format.empty()) o.format = sub->get_option("--format")->get_default_str();

  try {
    const std::string name = sub->get_name();
    if (name == "decompose") return decompose_cmd(o, in, out);
    if (name == "atoms") return atoms_cmd(o, in, out);
    if (name == "null-basis") return null_basis_cmd(o, in, out);
    if (name == "range-basis") return range_basis_cmd(o, in, out);
    if (name == "invariants") return invariants_cmd(o, in, out);
    if (name == "stellare") return stellare_cmd(o, in, out);
    if (name == "coalesce") return coalesce_cmd(o, in, out);
    if (name == "classify") return classify_cmd(o, in, out);
    if (name == "verify") return verify_cmd(o, out);
    if (name == "random") return random_cmd(o, out);
    if (name == "enumerate") return enumerate_cmd(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_verification_failure(e.code()) ? 2 : 1;
  }
  return 1;
}

}  // namespace nulltree::cli
