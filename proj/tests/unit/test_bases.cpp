#include <algorithm>

#include "doctest.h"
#include "nulltree/bases.hpp"
#include "nulltree/error.hpp"
#include "nulltree/exact_linalg.hpp"
#include "nulltree/generators.hpp"
#include "nulltree/io.hpp"
#include "nulltree/null_decomposition.hpp"
#include "oracles.hpp"

using namespace nulltree;

namespace {

std::vector<VertexId> ids(const Tree& t) { return {t.vertices().begin(), t.vertices().end()}; }

VertexVector vec(const Tree& t, std::initializer_list<std::pair<VertexId, int>> entries) {
  VertexVector x(t);
  for (const auto& [v, c] : entries) x.set(v, c);
  return x;
}

std::vector<VertexVector> vectors_of(const std::vector<BasicVector>& basis) {
  std::vector<VertexVector> out;
  for (const auto& b : basis) out.push_back(b.vector);
  return out;
}

std::vector<VertexVector> vectors_of(const ForestBasis& fb) { return vectors_of(fb.vectors); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kParseError;
}

const Tree kP5 = Tree::from_edges({{1, 2}, {2, 3}, {3, 4}, {4, 5}});

}  // namespace

TEST_CASE("S-basic subtree algorithm") {
  const Tree e1 = oracle::load_fixture("E1");
  SBasicSubtree b = sbsa(e1, 2);
  CHECK(ids(b.tree) == std::vector<VertexId>{1, 2, 3});
  CHECK(b.tree.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
  CHECK(oracle::nullity(b.tree) == 1);
  CHECK(b.host == 1);

  b = sbsa(e1, 2, ChoiceRule::kPreferUncoveredCore);
  CHECK(b.tree.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {5, 6}, {6, 7}});
  const BasicVector v = basic_vector(b, e1);
  CHECK(v.vector == vec(e1, {{2, 1}, {5, -1}, {7, 1}}));
  CHECK(oracle::annihilated(e1, v.vector));

  for (VertexId seed = 1; seed <= 5; ++seed) CHECK(sbsa(kP5, seed).tree == kP5);

  b = sbsa(e1, 6);
  CHECK(ids(b.tree) == std::vector<VertexId>{1, 2, 5, 6, 7});
}

TEST_CASE("S-basic subtree preconditions") {
  CHECK(code_of([] { sbsa(oracle::load_fixture("E3"), 1); }) == ErrorCode::kNotAtom);
  CHECK(code_of([] { sbsa(Tree::single(1), 1); }) == ErrorCode::kTooSmall);
  CHECK(code_of([] { sbsa(kP5, 9); }) == ErrorCode::kVertexNotFound);
}

TEST_CASE("basic vectors") {
  const Tree e1 = oracle::load_fixture("E1");
  SBasicSubtree b{e1.induced(std::vector<VertexId>{1, 2, 5, 6, 7}), 1, 2};
  CHECK(basic_vector(b, e1).vector == vec(e1, {{2, 1}, {5, -1}, {7, 1}}));
  b = SBasicSubtree{e1.induced(std::vector<VertexId>{1, 2, 3}), 1, 2};
  CHECK(basic_vector(b, e1).vector == vec(e1, {{2, 1}, {3, -1}}));
  b = SBasicSubtree{kP5, 1, 1};
  CHECK(basic_vector(b, kP5).vector == vec(kP5, {{1, 1}, {3, -1}, {5, 1}}));

  // The other pendant gives the same vector up to sign.
  b = SBasicSubtree{e1.induced(std::vector<VertexId>{1, 2, 5, 6, 7}), 1, 7};
  CHECK(basic_vector(b, e1).vector == vec(e1, {{2, 1}, {5, -1}, {7, 1}}));
  b = SBasicSubtree{e1.induced(std::vector<VertexId>{1, 2, 5, 6, 8}), 1, 8};
  CHECK(basic_vector(b, e1).vector == vec(e1, {{2, 1}, {5, -1}, {8, 1}}));

  // A supported vertex that loses a host neighbor breaks kernel membership.
  b = SBasicSubtree{e1.induced(std::vector<VertexId>{1, 2, 3, 5}), 1, 2};
  CHECK(code_of([&] { basic_vector(b, e1); }) == ErrorCode::kValidationFailed);
}

TEST_CASE("forest basis of E1") {
  const Tree e1 = oracle::load_fixture("E1");
  const ForestBasis fb = s_basis_forest(e1);
  REQUIRE(fb.basics.size() == 4);
  CHECK(ids(fb.basics[0].tree) == std::vector<VertexId>{1, 2, 3});
  CHECK(ids(fb.basics[1].tree) == std::vector<VertexId>{1, 3, 4});
  CHECK(ids(fb.basics[2].tree) == std::vector<VertexId>{1, 3, 5, 6, 7});
  CHECK(ids(fb.basics[3].tree) == std::vector<VertexId>{1, 3, 5, 6, 8});
  const std::vector<VertexVector> listed = {
      vec(e1, {{2, 1}, {5, -1}, {8, 1}}), vec(e1, {{3, 1}, {5, -1}, {8, 1}}),
      vec(e1, {{4, 1}, {5, -1}, {8, 1}}), vec(e1, {{7, 1}, {8, -1}})};
  CHECK(oracle::same_span(vectors_of(fb), oracle::dense(listed)));
  CHECK(fb.mc == std::vector<std::vector<int>>{{-1, 1, 1, 0, 0, 0, 0, 0},
                                               {0, 0, 0, 1, 0, 0, 0, 0},
                                               {0, 0, 0, 0, 1, -1, 1, 0},
                                               {0, 0, 0, 0, 0, 0, 0, 1}});
  CHECK(mc_csv(fb) ==
        "basic,1,2,3,4,5,6,7,8\n0,-1,1,1,0,0,0,0,0\n1,0,0,0,1,0,0,0,0\n"
        "2,0,0,0,0,1,-1,1,0\n3,0,0,0,0,0,0,0,1\n");
}

TEST_CASE("forest basis of a star atom and of P5") {
  const Tree star = Tree::from_edges({{9, 10}, {9, 11}, {9, 12}});
  ForestBasis fb = s_basis_forest(star);
  CHECK(fb.basics.size() == 2);
  CHECK(oracle::same_span(vectors_of(fb), oracle::dense({vec(star, {{10, 1}, {11, -1}}),
                                                         vec(star, {{10, 1}, {12, -1}})})));
  fb = s_basis_forest(kP5);
  REQUIRE(fb.basics.size() == 1);
  CHECK(fb.vectors[0].vector == vec(kP5, {{1, 1}, {3, -1}, {5, 1}}));

  fb = s_basis_forest(Tree::single(4));
  REQUIRE(fb.vectors.size() == 1);
  CHECK(fb.vectors[0].vector == VertexVector::unit(Tree::single(4), 4));
  CHECK(code_of([] { s_basis_forest(oracle::load_fixture("E3")); }) == ErrorCode::kNotAtom);
}

TEST_CASE("forest bases on random atoms") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Tree s = random_s_tree(8 + seed % 30, seed);
    for (const Atom& atom : a_set(s).atoms) {
      const ForestBasis fb = s_basis_forest(atom.tree);
      CHECK(fb.basics.size() == atom.supp.size() - atom.core.size());
      const oracle::Matrix k = oracle::null_space(oracle::adjacency(atom.tree), atom.tree.order());
      CHECK(oracle::same_span(vectors_of(fb), k));
      std::vector<int> touched(fb.columns.size(), 0);
      for (std::size_t r = 0; r < fb.mc.size(); ++r) {
        int sum = 0;
        bool fresh_plus = false;
        for (std::size_t c = 0; c < fb.columns.size(); ++c) {
          sum += fb.mc[r][c];
          if (fb.mc[r][c] == 1 && !touched[c]) fresh_plus = true;
        }
        CHECK(sum == 1);
        CHECK(fresh_plus);
        for (std::size_t c = 0; c < fb.columns.size(); ++c) touched[c] |= fb.mc[r][c] != 0;
        CHECK(classify(fb.basics[r].tree).is_s_basic);
        CHECK(oracle::annihilated(atom.tree, fb.vectors[r].vector));
        CHECK(fb.vectors[r].vector.is_signed_unit());
      }
      CHECK(std::all_of(touched.begin(), touched.end(), [](int x) { return x == 1; }));
    }
  }
}

TEST_CASE("atom range bases") {
  const NullDecomposition d = decompose(oracle::load_fixture("E2"));
  const Tree s2 = d.s_parts[1].tree;
  RangeBasis r = atom_range_basis(s2);
  REQUIRE(r.vectors.size() == 4);
  CHECK(r.vectors[0] == vec(s2, {{4, 1}}));
  CHECK(r.vectors[1] == vec(s2, {{6, 1}, {7, 1}}));
  CHECK(r.vectors[2] == vec(s2, {{5, 1}}));
  CHECK(r.vectors[3] == vec(s2, {{7, 1}, {8, 1}}));

  r = atom_range_basis(Tree::single(1));
  CHECK(r.vectors.empty());

  const Tree e1 = oracle::load_fixture("E1");
  r = atom_range_basis(e1);
  REQUIRE(r.vectors.size() == 4);
  CHECK(r.vectors[1] == vec(e1, {{2, 1}, {3, 1}, {4, 1}, {5, 1}}));
  CHECK(r.vectors[3] == vec(e1, {{5, 1}, {7, 1}, {8, 1}}));
  CHECK(r.roles == std::vector<RangeRole>{RangeRole::kCoreSingleton, RangeRole::kBouquet,
                                          RangeRole::kCoreSingleton, RangeRole::kBouquet});
  CHECK(oracle::rank(oracle::dense(r.vectors)) == 4);
}

TEST_CASE("null basis of whole trees") {
  const Tree e2 = oracle::load_fixture("E2");
  std::vector<BasicVector> basis = tree_null_basis(e2);
  REQUIRE(basis.size() == 4);
  CHECK(oracle::same_span(vectors_of(basis),
                          oracle::dense({vec(e2, {{2, 1}, {3, -1}}), vec(e2, {{10, 1}, {11, -1}}),
                                         vec(e2, {{10, 1}, {12, -1}}),
                                         vec(e2, {{6, 1}, {7, -1}, {8, 1}})})));
  for (std::size_t i = 1; i < basis.size(); ++i) {
    CHECK(basis[i - 1].vector.support().front() <= basis[i].vector.support().front());
  }
  CHECK(tree_null_basis(parse_tree("1 2\n2 3\n3 4")).empty());
  basis = tree_null_basis(oracle::load_fixture("E1"));
  CHECK(basis.size() == 4);
}

TEST_CASE("range basis of whole trees") {
  const Tree e2 = oracle::load_fixture("E2");
  RangeBasis r = tree_range_basis(e2);
  REQUIRE(r.vectors.size() == 14);
  const std::vector<std::vector<VertexId>> expected = {
      {1}, {2, 3}, {4}, {6, 7}, {5}, {7, 8}, {9}, {10, 11, 12}, {13}, {14}, {15}, {16}, {17}, {18}};
  for (std::size_t i = 0; i < 14; ++i) CHECK(r.vectors[i].support() == expected[i]);
  CHECK(oracle::same_span(r.vectors, oracle::adjacency(e2)));

  const Tree p2 = parse_tree("1 2");
  r = tree_range_basis(p2);
  REQUIRE(r.vectors.size() == 2);
  CHECK(r.vectors[0] == VertexVector::unit(p2, 1));
  CHECK(r.vectors[1] == VertexVector::unit(p2, 2));

  const Tree e3 = oracle::load_fixture("E3");
  r = tree_range_basis(e3);
  REQUIRE(r.vectors.size() == 4);
  CHECK(r.vectors[0].support() == std::vector<VertexId>{2});
  CHECK(r.vectors[1].support() == std::vector<VertexId>{1, 3});
  CHECK(r.vectors[2].support() == std::vector<VertexId>{5});
  CHECK(r.vectors[3].support() == std::vector<VertexId>{4, 6});
  CHECK(oracle::same_span(r.vectors, oracle::adjacency(e3)));
}

TEST_CASE("null and range bases together span everything") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Tree t = random_tree(1 + seed % 20, seed + 500);
    std::vector<VertexVector> all = vectors_of(tree_null_basis(t));
    const RangeBasis r = tree_range_basis(t);
    CHECK(all.size() == oracle::nullity(t));
    CHECK(r.vectors.size() == oracle::rank(t));
    all.insert(all.end(), r.vectors.begin(), r.vectors.end());
    CHECK(all.size() == t.order());
    CHECK(oracle::rank(oracle::dense(all)) == t.order());
  }
}
