#include "nulltree/tree_ops.hpp"

#include <algorithm>
#include <set>

#include "nulltree/error.hpp"
#include "nulltree/exact_linalg.hpp"
#include "nulltree/matching.hpp"
#include "nulltree/null_decomposition.hpp"

namespace nulltree {

namespace {

[[noreturn]] void mismatch(const std::string& what) {
  throw Error(ErrorCode::kFormulaMismatch, what);
}

void expect_equal(std::size_t formula, std::size_t computed, const char* what) {
  if (formula != computed) {
    mismatch(std::string(what) + ": formula " + std::to_string(formula) +
             ", computed " + std::to_string(computed));
  }
}

std::vector<VertexId> mapped(const std::vector<VertexId>& ids,
                             const std::map<VertexId, VertexId>& map) {
  std::vector<VertexId> out;
  for (VertexId v : ids) out.push_back(map.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StellareResult stellare(const Tree& t, std::span<const std::size_t> ks) {
  if (ks.size() != t.order()) {
    throw Error(ErrorCode::kBadArity, std::to_string(ks.size()) +
                                          " pendant counts for " +
                                          std::to_string(t.order()) + " vertices");
  }
  StellareResult r{Tree::single(0), {}, {}};
  std::vector<VertexId> vertices(t.vertices().begin(), t.vertices().end());
  std::vector<Edge> edges = t.edges();
  VertexId next = t.max_id() + 1;
  for (std::size_t i = 0; i < t.order(); ++i) {
    const VertexId base = t.vertex(i);
    if (ks[i] < 2) {
      throw Error(ErrorCode::kKTooSmall, "k = " + std::to_string(ks[i]) +
                                             " at vertex " + std::to_string(base));
    }
    r.label_to_id[{base, 0}] = base;
    r.id_to_label[base] = {base, 0};
    for (std::size_t w = 1; w <= ks[i]; ++w) {
      const VertexId id = next++;
      vertices.push_back(id);
      edges.emplace_back(base, id);
      r.label_to_id[{base, w}] = id;
      r.id_to_label[id] = {base, w};
    }
  }
  r.tree = Tree::from_edges(std::move(vertices), edges);
  return r;
}

StellareReport stellare_invariants(const Tree& t, std::span<const std::size_t> ks) {
  const StellareResult star = stellare(t, ks);
  const Tree& s = star.tree;
  StellareReport r;
  r.n = t.order();
  for (std::size_t k : ks) {
    r.k_sum += k;
    r.k_product *= static_cast<unsigned long>(k);
  }
  r.base_nullity = t.order() - rank(adjacency_matrix(t));
  r.rank = rank(adjacency_matrix(s));
  r.nullity = s.order() - r.rank;
  const MatchingInvariants mi = matching_invariants(s);
  r.alpha = mi.alpha;
  r.nu = mi.nu;
  r.m_count = mi.m_count;
  r.gamma = mi.gamma;
  const SupportCore sc = support_core(s);
  r.core_is_base = std::ranges::equal(sc.core, t.vertices());

  expect_equal(r.k_sum - r.n, r.nullity, "stellare nullity");
  if (!(r.nullity >= r.n && r.n >= r.base_nullity)) {
    mismatch("stellare nullity chain sum k - n >= n >= null(T) fails");
  }
  const bool both_equal = r.nullity == r.n && r.n == r.base_nullity;
  const bool k_minimal = r.n == 1 && ks[0] == 2;
  if (both_equal != k_minimal) {
    mismatch("stellare nullity chain equality case disagrees with n = 1, k_1 = 2");
  }
  expect_equal(2 * r.n, r.rank, "stellare rank");
  expect_equal(r.k_sum, r.alpha, "stellare alpha");
  expect_equal(r.n, r.nu, "stellare nu");
  expect_equal(r.n, r.gamma, "stellare gamma");
  if (r.m_count != r.k_product) {
    mismatch("stellare m: formula " + r.k_product.get_str() + ", computed " +
             r.m_count.get_str());
  }
  if (!r.core_is_base) mismatch("stellare core differs from the base vertex set");
  const std::vector<VertexId> added = sorted_difference(s.vertices(), t.vertices());
  if (sc.supp != added) mismatch("stellare support differs from the added pendants");
  return r;
}

StellareBases stellare_bases(const Tree& t, std::span<const std::size_t> ks) {
  StellareBases b{stellare(t, ks), {}, {}};
  const Tree& s = b.stellare.tree;
  for (std::size_t i = 0; i < t.order(); ++i) {
    const VertexId base = t.vertex(i);
    for (std::size_t j = 2; j <= ks[i]; ++j) {
      VertexVector x(s);
      x.set(b.stellare.id(base, 1), 1);
      x.set(b.stellare.id(base, j), -1);
      b.null_basis.push_back(std::move(x));
    }
  }
  for (std::size_t i = 0; i < t.order(); ++i) {
    const VertexId base = t.vertex(i);
    b.range_basis.push_back(VertexVector::unit(s, base));
    std::vector<VertexId> bouquet_ids;
    for (std::size_t w = 1; w <= ks[i]; ++w) bouquet_ids.push_back(b.stellare.id(base, w));
    b.range_basis.push_back(VertexVector::indicator(s, bouquet_ids));
  }

  const RationalMatrix a = adjacency_matrix(s);
  for (const VertexVector& x : b.null_basis) {
    if (!in_kernel(s, x)) mismatch("stellare null vector " + x.debug_string() + " not in kernel");
  }
  const KernelBasis k = kernel(a);
  if (rank(b.null_basis) != b.null_basis.size() || !span_equal(b.null_basis, k.vectors)) {
    mismatch("stellare null basis does not span the kernel");
  }
  const std::vector<VertexVector> cols = a.columns();
  if (rank(b.range_basis) != b.range_basis.size() || !span_equal(b.range_basis, cols)) {
    mismatch("stellare range basis does not span the column space");
  }
  return b;
}

CoalescenceResult s_coalescence(const CoalescencePlan& plan) {
  if (plan.parts.empty()) {
    throw Error(ErrorCode::kBadArity, "coalescence needs at least one part");
  }
  for (std::size_t i = 0; i < plan.parts.size(); ++i) {
    const CoalescencePart& part = plan.parts[i];
    part.s_tree.index_of(part.attach);
    const SupportCore sc = support_core(part.s_tree);
    if (sc.supp.size() + sc.core.size() != part.s_tree.order()) {
      throw Error(ErrorCode::kNotSTree, "part " + std::to_string(i) + " is not an S-tree");
    }
    if (!sorted_contains(sc.supp, part.attach)) {
      throw Error(ErrorCode::kNotSupported, "attach vertex " + std::to_string(part.attach) +
                                                " of part " + std::to_string(i) +
                                                " is not supported");
    }
  }

  bool disjoint = true;
  {
    std::set<VertexId> seen;
    for (const auto& part : plan.parts) {
      for (VertexId v : part.s_tree.vertices()) disjoint &= seen.insert(v).second;
    }
  }

  CoalescenceResult r{Tree::single(0), 0, {}};
  VertexId largest = 0;
  bool any = false;
  for (const auto& part : plan.parts) {
    std::map<VertexId, VertexId> ids;
    VertexId offset = 0;
    if (!disjoint && any) offset = largest + 1 - part.s_tree.vertex(0);
    for (VertexId v : part.s_tree.vertices()) {
      ids[v] = v + offset;
      largest = any ? std::max(largest, v + offset) : v + offset;
      any = true;
    }
    r.provenance.push_back(std::move(ids));
  }
  r.star = largest + 1;

  std::vector<VertexId> vertices{r.star};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < plan.parts.size(); ++i) {
    const CoalescencePart& part = plan.parts[i];
    auto& ids = r.provenance[i];
    for (VertexId v : part.s_tree.vertices()) {
      if (v != part.attach) vertices.push_back(ids.at(v));
    }
    for (const Edge& e : part.s_tree.edges()) {
      const VertexId a = e.u == part.attach ? r.star : ids.at(e.u);
      const VertexId b = e.v == part.attach ? r.star : ids.at(e.v);
      edges.emplace_back(a, b);
    }
    ids[part.attach] = r.star;
  }
  r.tree = Tree::from_edges(std::move(vertices), edges);
  return r;
}

CoalescenceReport coalescence_invariants(const CoalescencePlan& plan) {
  const CoalescenceResult result = s_coalescence(plan);
  const Tree& t = result.tree;
  const std::size_t k = plan.parts.size();

  CoalescenceReport r;
  r.k = k;
  const SupportCore sc = support_core(t);
  r.supp_size = sc.supp.size();
  r.core_size = sc.core.size();
  r.rank = rank(adjacency_matrix(t));
  r.nullity = t.order() - r.rank;
  const MatchingInvariants mi = matching_invariants(t);
  r.nu = mi.nu;
  r.alpha = mi.alpha;
  r.m_count = mi.m_count;

  std::vector<VertexId> core_union;
  std::vector<VertexId> supp_union{result.star};
  std::size_t core_sum = 0, supp_sum = 0, rank_sum = 0, nullity_sum = 0;
  std::size_t nu_sum = 0, alpha_sum = 0, nontrivial = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Tree& s = plan.parts[i].s_tree;
    const SupportCore part_sc = support_core(s);
    const auto& ids = result.provenance[i];
    core_union = sorted_union(core_union, mapped(part_sc.core, ids));
    std::vector<VertexId> rest;
    for (VertexId v : part_sc.supp) {
      if (v != plan.parts[i].attach) rest.push_back(v);
    }
    supp_union = sorted_union(supp_union, mapped(rest, ids));
    core_sum += part_sc.core.size();
    supp_sum += part_sc.supp.size();
    const std::size_t part_rank = rank(adjacency_matrix(s));
    rank_sum += part_rank;
    nullity_sum += s.order() - part_rank;
    nu_sum += nu(s);
    alpha_sum += alpha(s);
    r.m_product *= count_max_matchings(s);
    if (s.order() >= 3) ++nontrivial;
  }
  r.strict_m_required = nontrivial >= 2;

  if (sc.supp.size() + sc.core.size() != t.order()) mismatch("coalescence is not an S-tree");
  if (sc.core != core_union) mismatch("coalescence core is not the union of part cores");
  expect_equal(core_sum, r.core_size, "coalescence core count");
  if (sc.supp != supp_union) mismatch("coalescence support is not {v*} plus the part supports");
  expect_equal(1 + supp_sum - k, r.supp_size, "coalescence support count");
  expect_equal(rank_sum, r.rank, "coalescence rank");
  expect_equal(1 + nullity_sum - k, r.nullity, "coalescence nullity");
  expect_equal(nu_sum, r.nu, "coalescence nu");
  if (r.strict_m_required ? !(r.m_count < r.m_product) : !(r.m_count <= r.m_product)) {
    mismatch("coalescence m " + r.m_count.get_str() + " vs product " + r.m_product.get_str());
  }
  expect_equal(1 + alpha_sum - k, r.alpha, "coalescence alpha");
  return r;
}

std::vector<VertexId> i_supp(const Tree& s) {
  std::vector<VertexId> out;
  for (VertexId v : support_core(s).supp) {
    if (s.degree(v) > 1) out.push_back(v);
  }
  return out;
}

namespace {

Forest split_at(const Tree& s, VertexId v, VertexId& next_id) {
  const std::vector<VertexId> nbrs = s.neighbors(v);
  Forest out;
  for (VertexId u : nbrs) {
    Tree side = subtree_toward(s, v, u);
    std::vector<VertexId> verts(side.vertices().begin(), side.vertices().end());
    std::vector<Edge> edges = side.edges();
    const VertexId copy = next_id++;
    verts.push_back(copy);
    edges.emplace_back(u, copy);
    out.push_back(Tree::from_edges(std::move(verts), edges));
  }
  return out;
}

bool is_s_tree(const Tree& t) {
  const SupportCore sc = support_core(t);
  return sc.supp.size() + sc.core.size() == t.order();
}

}  // namespace

Forest s_decompose_step(const Tree& s, VertexId v) {
  s.index_of(v);
  const SupportCore sc = support_core(s);
  if (sc.supp.size() + sc.core.size() != s.order()) {
    throw Error(ErrorCode::kNotSTree, "input of s_decompose_step is not an S-tree");
  }
  if (!sorted_contains(sc.supp, v) || s.degree(v) < 2) {
    throw Error(ErrorCode::kNotInternalSupport,
                "vertex " + std::to_string(v) + " is not an internal supported vertex");
  }
  VertexId next = s.max_id() + 1;
  Forest pieces = split_at(s, v, next);
  for (const Tree& p : pieces) {
    if (!is_s_tree(p)) mismatch("split piece is not an S-tree");
  }
  return pieces;
}

Forest s_decompose(const Tree& s) {
  if (!is_s_tree(s)) throw Error(ErrorCode::kNotSTree, "input of s_decompose is not an S-tree");
  VertexId next = s.max_id() + 1;
  Forest done;
  std::vector<Tree> work{s};
  while (!work.empty()) {
    Tree t = std::move(work.back());
    work.pop_back();
    const std::vector<VertexId> internal = i_supp(t);
    if (internal.empty()) {
      done.push_back(std::move(t));
      continue;
    }
    Forest pieces = split_at(t, internal.front(), next);
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      if (!is_s_tree(*it)) mismatch("split piece is not an S-tree");
      work.push_back(std::move(*it));
    }
  }
  std::sort(done.begin(), done.end(),
            [](const Tree& a, const Tree& b) { return a.vertex(0) < b.vertex(0); });
  return done;
}

}  // namespace nulltree
