#include "nulltree/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "nulltree/error.hpp"
#include "nulltree/null_decomposition.hpp"
#include "nulltree/tree_ops.hpp"

namespace nulltree {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

Tree prufer_decode(std::size_t n, std::span<const std::uint32_t> code) {
  if (n == 0) throw Error(ErrorCode::kBadCode, "n must be positive");
  const std::size_t expected = n >= 2 ? n - 2 : 0;
  if (code.size() != expected) {
    throw Error(ErrorCode::kBadCode, "code of length " + std::to_string(code.size()) +
                                         " for n = " + std::to_string(n));
  }
  std::vector<VertexId> vertices(n);
  for (std::size_t i = 0; i < n; ++i) vertices[i] = i;
  if (n == 1) return Tree::from_edges(std::move(vertices), {});

  std::vector<std::size_t> degree(n, 1);
  for (std::uint32_t c : code) {
    if (c >= n) {
      throw Error(ErrorCode::kBadCode, "entry " + std::to_string(c) + " out of range");
    }
    ++degree[c];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 1) leaves.push(i);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::uint32_t c : code) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const std::size_t a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree::from_edges(std::move(vertices), edges);
}

void enumerate_trees(std::size_t n, const std::function<void(const Tree&)>& emit,
                     std::size_t shard, std::size_t shards) {
  if (shards == 0 || shard >= shards) {
    throw Error(ErrorCode::kBadArity, "shard " + std::to_string(shard) + " of " +
                                          std::to_string(shards));
  }
  if (n <= 2) {
    if (shard == 0) emit(prufer_decode(n, {}));
    return;
  }
  std::vector<std::uint32_t> code(n - 2, 0);
  for (;;) {
    if (code[0] % shards == shard) emit(prufer_decode(n, code));
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] + 1 == n) code[--i] = 0;
    if (i == 0) return;
    ++code[i - 1];
  }
}

namespace {

std::string ahu(const Tree& t, std::size_t root, std::size_t parent) {
  std::vector<std::string> kids;
  for (std::size_t j : t.neighbor_indices(root)) {
    if (j != parent) kids.push_back(ahu(t, j, root));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const std::string& k : kids) out += k;
  return out + ")";
}

// AHU encoding rooted at the center (the smaller encoding for a bicenter).
std::string canonical(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = t.neighbor_indices(i).size();
    if (degree[i] <= 1) layer.push_back(i);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t i : layer) {
      for (std::size_t j : t.neighbor_indices(i)) {
        if (--degree[j] == 1) next.push_back(j);
      }
    }
    layer = std::move(next);
  }
  const std::size_t none = n;
  std::string best;
  for (std::size_t c : layer) {
    std::string code = ahu(t, c, none);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<Tree> enumerate_unlabeled_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<Tree> level{Tree::single(0)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<std::string, Tree> seen;
    for (const Tree& t : level) {
      for (std::size_t i = 0; i < t.order(); ++i) {
        std::vector<VertexId> vs(t.vertices().begin(), t.vertices().end());
        std::vector<Edge> es = t.edges();
        const VertexId fresh = m - 1;
        vs.push_back(fresh);
        es.emplace_back(t.vertex(i), fresh);
        Tree grown = Tree::from_edges(std::move(vs), es);
        seen.try_emplace(canonical(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, t] : seen) level.push_back(std::move(t));
  }
  return level;
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kBadCode, "n must be positive");
  Rng rng(seed);
  std::vector<std::uint32_t> code(n >= 2 ? n - 2 : 0);
  for (auto& c : code) c = static_cast<std::uint32_t>(rng.below(n));
  return prufer_decode(n, code);
}

Tree compact_labels(const Tree& t) {
  std::vector<VertexId> vs(t.order());
  for (std::size_t i = 0; i < t.order(); ++i) vs[i] = i;
  std::vector<Edge> es;
  for (const Edge& e : t.edges()) es.emplace_back(t.index_of(e.u), t.index_of(e.v));
  return Tree::from_edges(std::move(vs), es);
}

namespace {

Tree random_stellare(std::size_t budget, Rng& rng) {
  const std::size_t n0 = rng.between(1, budget / 3);
  Tree base = random_tree(n0, rng.below(std::numeric_limits<std::uint64_t>::max()));
  std::vector<std::size_t> ks(n0, 2);
  std::size_t spare = budget - 3 * n0;
  for (std::size_t i = 0; i < n0 && spare > 0; ++i) {
    const std::size_t extra = rng.below(std::min<std::size_t>(spare, 3) + 1);
    ks[i] += extra;
    spare -= extra;
  }
  return stellare(base, ks).tree;
}

Tree build(std::size_t budget, Rng& rng, int depth) {
  if (budget < 6 || depth >= 3 || rng.below(2) == 0) return random_stellare(budget, rng);
  const std::size_t k = rng.between(2, std::min<std::size_t>(4, budget / 3));
  // The fused tree has sum(orders) - k + 1 vertices.
  std::size_t room = budget + k - 1;
  CoalescencePlan plan;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t left = k - i - 1;
    const std::size_t cap = room - 3 * left;
    const std::size_t share = left == 0 ? cap : rng.between(3, std::max<std::size_t>(3, cap / 2));
    Tree part = compact_labels(build(share, rng, depth + 1));
    room -= part.order();
    const std::vector<VertexId> supp = support_core(part).supp;
    const VertexId attach = supp[rng.below(supp.size())];
    plan.parts.push_back(CoalescencePart{std::move(part), attach});
  }
  return s_coalescence(plan).tree;
}

}  // namespace

Tree random_s_tree(std::size_t budget, Rng& rng) {
  Tree t = compact_labels(build(std::max<std::size_t>(budget, 3), rng, 0));
  const Classification c = classify(t);
  if (!c.is_s_tree) throw Error(ErrorCode::kFormulaMismatch, "random S-tree is not an S-tree");
  return t;
}

Tree random_s_tree(std::size_t budget, std::uint64_t seed) {
  Rng rng(seed);
  return random_s_tree(budget, rng);
}

}  // namespace nulltree
