#include "nulltree/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>

#include "nulltree/bases.hpp"
#include "nulltree/error.hpp"
#include "nulltree/exact_linalg.hpp"
#include "nulltree/matching.hpp"
#include "nulltree/null_decomposition.hpp"
#include "nulltree/oracle.hpp"

namespace nulltree {

namespace {

enum Check : std::size_t {
  kRankTwiceNu,
  kNullitySuppCore,
  kNuFormula,
  kAlphaFormula,
  kNPartsPerfect,
  kSPartsSTrees,
  kAtomsSAtoms,
  kAtomsBipartite,
  kAtomNullityBound,
  kSBasicEquivalence,
  kMatchingProduct,
  kMatchingBruteForce,
  kMatchingsAvoidConnBond,
  kNullBasis,
  kRangeBasis,
  kCheckCount,
};

const char* const kNames[kCheckCount] = {
    "rank = 2 nu",
    "nullity = supp - core",
    "nu = core + |F_N|/2",
    "alpha = supp + |F_N|/2",
    "N-parts have perfect matchings",
    "S-parts are S-trees",
    "atoms are S-atoms",
    "atoms are (core, supp)-bipartite",
    "null(atom) >= delta_core - 1",
    "S-basic equivalence",
    "m(T) = prod m(atom)",
    "m(T) = brute force count",
    "maximum matchings avoid Conn and Bond",
    "null basis",
    "range basis",
};

std::string tree_text(const Tree& t) {
  std::string out;
  for (const Edge& e : t.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out.empty() ? std::to_string(t.vertex(0)) : out;
}

bool entries_in_unit_range(const VertexVector& x) {
  for (const Rational& q : x.entries()) {
    if (!(q == 0 || q == 1 || q == -1)) return false;
  }
  return true;
}

}  // namespace

PropertySuite::PropertySuite() {
  for (const char* name : kNames) results_.push_back(CheckResult{name, 0, 0, {}});
}

bool PropertySuite::ok() const {
  return std::all_of(results_.begin(), results_.end(), [](const CheckResult& r) { return r.ok(); });
}

void PropertySuite::merge(const PropertySuite& other) {
  trees_ += other.trees_;
  for (std::size_t i = 0; i < results_.size(); ++i) {
    results_[i].passed += other.results_[i].passed;
    results_[i].failed += other.results_[i].failed;
    if (results_[i].first_failure.empty()) results_[i].first_failure = other.results_[i].first_failure;
  }
}

void PropertySuite::record(std::size_t check, bool passed, const Tree& t, const std::string& why) {
  CheckResult& r = results_[check];
  if (passed) {
    ++r.passed;
    return;
  }
  ++r.failed;
  if (r.first_failure.empty()) r.first_failure = "[" + tree_text(t) + "] " + why;
}

void PropertySuite::check(const Tree& t) {
  ++trees_;
  const NullDecomposition d = decompose(t);
  const AtomSet atoms = a_set(d);
  const RationalMatrix a = adjacency_matrix(t);
  const std::size_t rk = rank(a);
  const std::size_t nullity = t.order() - rk;
  const std::size_t supp = d.support.supp.size();
  const std::size_t core = d.support.core.size();
  const std::size_t fn = d.n_part_vertex_count();
  const std::size_t matching = nu(t);

  record(kRankTwiceNu, rk == 2 * matching, t,
         "rank " + std::to_string(rk) + ", nu " + std::to_string(matching));
  record(kNullitySuppCore, nullity == supp - core, t, "nullity " + std::to_string(nullity));
  record(kNuFormula, matching == core + fn / 2, t, "nu " + std::to_string(matching));
  record(kAlphaFormula, alpha(t) == supp + fn / 2, t, "alpha " + std::to_string(alpha(t)));

  bool perfect = true;
  for (const Tree& n : d.n_parts) perfect &= 2 * nu(n) == n.order();
  record(kNPartsPerfect, perfect, t, "an N-part has no perfect matching");

  bool s_parts = true;
  for (const Part& p : d.s_parts) {
    const Classification c = classify(p.tree);
    s_parts &= c.is_s_tree && c.support.supp == p.supp && c.support.core == p.core;
  }
  record(kSPartsSTrees, s_parts, t, "an S-part is not an S-tree with the inherited support");

  bool s_atoms = true, bipartite = true, bound = true, equivalence = true;
  Integer product = 1;
  for (const Atom& atom : atoms.atoms) {
    const Classification c = classify(atom.tree);
    s_atoms &= c.is_s_atom && c.support.supp == atom.supp && c.support.core == atom.core;
    for (const Edge& e : atom.tree.edges()) {
      const bool uc = sorted_contains(atom.core, e.u), vc = sorted_contains(atom.core, e.v);
      const bool us = sorted_contains(atom.supp, e.u), vs = sorted_contains(atom.supp, e.v);
      bipartite &= (uc && vs) || (us && vc);
    }
    bipartite &= atom.core.size() + atom.supp.size() == atom.tree.order();
    bound &= c.nullity + 1 >= c.delta_core;
    if (atom.tree.order() >= 2) {
      const std::size_t n = atom.tree.order();
      const bool conditions[] = {
          c.delta_core == 2,
          atom.supp.size() == atom.core.size() + 1,
          c.nullity == 1,
          2 * nu(atom.tree) + 1 == n,
          2 * alpha(atom.tree) == n + 1,
      };
      equivalence &= std::all_of(std::begin(conditions), std::end(conditions),
                                 [&](bool x) { return x == conditions[0]; });
    }
    product *= count_max_matchings(atom.tree);
  }
  record(kAtomsSAtoms, s_atoms, t, "an atom is not an S-atom");
  record(kAtomsBipartite, bipartite, t, "an atom edge is not core-supp");
  record(kAtomNullityBound, bound, t, "nullity below delta_core - 1");
  record(kSBasicEquivalence, equivalence, t, "the five S-basic conditions disagree");
  const Integer m = count_max_matchings(t);
  record(kMatchingProduct, product == m, t, "product " + product.get_str() + ", m " + m.get_str());

  if (t.order() <= brute_force_limit) {
    const OracleReport o = brute_force(t, brute_force_limit);
    record(kMatchingBruteForce, Integer(static_cast<unsigned long>(o.matchings.size())) == m, t,
           "brute force " + std::to_string(o.matchings.size()) + ", m " + m.get_str());
    bool avoid = true;
    for (const auto& mm : o.matchings) {
      for (const Edge& e : mm) {
        avoid &= !std::binary_search(d.connection_edges.begin(), d.connection_edges.end(), e);
        avoid &= !std::binary_search(atoms.bond_edges.begin(), atoms.bond_edges.end(), e);
      }
    }
    record(kMatchingsAvoidConnBond, avoid, t, "a maximum matching uses a Conn or Bond edge");
  }

  try {
    const std::vector<BasicVector> basis = tree_null_basis(t);
    std::vector<VertexVector> vs;
    bool good = basis.size() == nullity;
    for (const BasicVector& b : basis) {
      good &= entries_in_unit_range(b.vector) && in_kernel(t, b.vector);
      vs.push_back(b.vector);
    }
    good &= span_equal(vs, kernel(a).vectors);
    record(kNullBasis, good, t, "null basis fails count, entries, kernel or span");
  } catch (const Error& e) {
    record(kNullBasis, false, t, e.what());
  }
  try {
    const RangeBasis r = tree_range_basis(t);
    bool good = r.vectors.size() == rk && span_equal(r.vectors, a.columns());
    record(kRangeBasis, good, t, "range basis fails count or span");
  } catch (const Error& e) {
    record(kRangeBasis, false, t, e.what());
  }
}

Tree fixture_e1() {
  return Tree::from_edges({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {5, 6}, {6, 7}, {6, 8}});
}

Tree fixture_e2() {
  return Tree::from_edges({{1, 2},  {1, 3},  {1, 13},  {13, 14}, {13, 9},  {14, 4},
                           {4, 6},  {4, 7},  {7, 5},   {5, 8},   {9, 10},  {9, 11},
                           {9, 12}, {9, 16}, {16, 15}, {16, 17}, {17, 18}});
}

Tree fixture_e3() { return Tree::from_edges({{1, 2}, {3, 2}, {2, 5}, {4, 5}, {6, 5}}); }

namespace {

VertexVector sparse(const Tree& t, std::initializer_list<std::pair<VertexId, int>> entries) {
  VertexVector x(t);
  for (const auto& [v, c] : entries) x.set(v, c);
  return x;
}

std::vector<VertexVector> vectors_of(const std::vector<BasicVector>& basis) {
  std::vector<VertexVector> out;
  for (const BasicVector& b : basis) out.push_back(b.vector);
  return out;
}

}  // namespace

std::vector<CheckResult> verify_fixtures() {
  std::vector<CheckResult> out;
  auto claim = [&](const std::string& name, const std::function<bool()>& body) {
    CheckResult r{name, 0, 0, {}};
    try {
      if (body()) {
        r.passed = 1;
      } else {
        r.failed = 1;
        r.first_failure = "value differs";
      }
    } catch (const Error& e) {
      r.failed = 1;
      r.first_failure = e.what();
    }
    out.push_back(std::move(r));
  };

  const Tree e1 = fixture_e1();
  claim("E1 supp = {2,3,4,5,7,8}", [&] {
    return support_core(e1).supp == std::vector<VertexId>{2, 3, 4, 5, 7, 8};
  });
  claim("E1 core = {1,6}", [&] { return support_core(e1).core == std::vector<VertexId>{1, 6}; });
  claim("E1 nullity = 4", [&] { return kernel(adjacency_matrix(e1)).nullity() == 4; });
  claim("E1 rank = 4", [&] { return rank(adjacency_matrix(e1)) == 4; });
  claim("E1 null basis spans the listed kernel basis", [&] {
    const std::vector<VertexVector> listed = {
        sparse(e1, {{2, 1}, {5, -1}, {8, 1}}),
        sparse(e1, {{3, 1}, {5, -1}, {8, 1}}),
        sparse(e1, {{4, 1}, {5, -1}, {8, 1}}),
        sparse(e1, {{7, 1}, {8, -1}}),
    };
    return span_equal(vectors_of(tree_null_basis(e1)), listed);
  });

  const Tree e2 = fixture_e2();
  const NullDecomposition d2 = decompose(e2);
  claim("E2 S-parts {1,2,3} {4,5,6,7,8} {9,10,11,12}", [&] {
    std::vector<std::vector<VertexId>> got;
    for (const Part& p : d2.s_parts) got.emplace_back(p.tree.vertices().begin(), p.tree.vertices().end());
    return got == std::vector<std::vector<VertexId>>{{1, 2, 3}, {4, 5, 6, 7, 8}, {9, 10, 11, 12}};
  });
  claim("E2 N-parts {13,14} {15,16,17,18}", [&] {
    std::vector<std::vector<VertexId>> got;
    for (const Tree& n : d2.n_parts) got.emplace_back(n.vertices().begin(), n.vertices().end());
    return got == std::vector<std::vector<VertexId>>{{13, 14}, {15, 16, 17, 18}};
  });
  claim("E2 null basis spans {e2-e3, e10-e11, e10-e12, e6-e7+e8}", [&] {
    const std::vector<VertexVector> listed = {
        sparse(e2, {{2, 1}, {3, -1}}),
        sparse(e2, {{10, 1}, {11, -1}}),
        sparse(e2, {{10, 1}, {12, -1}}),
        sparse(e2, {{6, 1}, {7, -1}, {8, 1}}),
    };
    const std::vector<BasicVector> basis = tree_null_basis(e2);
    return basis.size() == 4 && span_equal(vectors_of(basis), listed);
  });
  claim("E2 range basis has 14 vectors and spans the column space", [&] {
    const RangeBasis r = tree_range_basis(e2);
    return r.vectors.size() == 14 && span_equal(r.vectors, adjacency_matrix(e2).columns());
  });
  claim("E2 range basis equals the listed basis up to order", [&] {
    std::vector<VertexVector> listed = {
        sparse(e2, {{1, 1}}),  sparse(e2, {{2, 1}, {3, 1}}),
        sparse(e2, {{4, 1}}),  sparse(e2, {{6, 1}, {7, 1}}),
        sparse(e2, {{5, 1}}),  sparse(e2, {{7, 1}, {8, 1}}),
        sparse(e2, {{9, 1}}),  sparse(e2, {{10, 1}, {11, 1}, {12, 1}}),
    };
    for (VertexId v = 13; v <= 18; ++v) listed.push_back(VertexVector::unit(e2, v));
    std::vector<std::vector<VertexId>> a, b;
    for (const VertexVector& x : tree_range_basis(e2).vectors) a.push_back(x.support());
    for (const VertexVector& x : listed) b.push_back(x.support());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  });
  return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::size_t width = 5;
  for (const CheckResult& r : results) width = std::max(width, r.name.size());
  std::string out;
  char line[64];
  for (const CheckResult& r : results) {
    out += r.ok() ? "PASS  " : "FAIL  ";
    out += r.name + std::string(width - r.name.size(), ' ');
    std::snprintf(line, sizeof line, "  %10zu passed  %zu failed\n", r.passed, r.failed);
    out += line;
  }
  for (const CheckResult& r : results) {
    if (!r.ok()) out += "first failure of '" + r.name + "': " + r.first_failure + "\n";
  }
  return out;
}

}  // namespace nulltree
