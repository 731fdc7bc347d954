#include "nulltree/matching.hpp"

#include <algorithm>
#include <limits>

namespace nulltree {

namespace {

// (size, count) of the best matchings of a rooted subtree in one state.
struct Best {
  std::ptrdiff_t size = std::numeric_limits<std::ptrdiff_t>::min() / 4;
  Integer count = 0;
};

Best combine(const Best& a, const Best& b) {
  return Best{a.size + b.size, a.count * b.count};
}

Best better(const Best& a, const Best& b) {
  if (a.size > b.size) return a;
  if (b.size > a.size) return b;
  return Best{a.size, a.count + b.count};
}

// Children lists in BFS order from the smallest vertex.
struct Rooted {
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> children;
};

Rooted root(const Tree& t) {
  auto r = t.rooted_at(0);
  Rooted out;
  out.order = std::move(r.order);
  out.children.resize(t.order());
  for (std::size_t i : out.order) {
    if (i != 0) out.children[r.parent[i]].push_back(i);
  }
  return out;
}

}  // namespace

Integer count_max_matchings(const Tree& t) {
  Rooted r = root(t);
  // free_: root of the subtree unmatched; matched: root matched to a child.
  std::vector<Best> free_(t.order());
  std::vector<Best> matched(t.order());
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const std::size_t v = *it;
    Best f{0, 1};
    Best m;
    for (std::size_t c : r.children[v]) {
      const Best best_c = better(free_[c], matched[c]);
      Best with_edge = free_[c];
      with_edge.size += 1;
      m = better(combine(m, best_c), combine(f, with_edge));
      f = combine(f, best_c);
    }
    free_[v] = f;
    matched[v] = m;
  }
  return better(free_[0], matched[0]).count;
}

std::size_t nu(const Tree& t) {
  // Greedy leaf matching is optimal on trees: match a vertex to its parent
  // whenever both are still free, processing leaves upward.
  auto r = t.rooted_at(0);
  std::vector<char> used(t.order(), 0);
  std::size_t size = 0;
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const std::size_t v = *it;
    const std::size_t p = r.parent[v];
    if (p != v && !used[v] && !used[p]) {
      used[v] = used[p] = 1;
      ++size;
    }
  }
  return size;
}

std::size_t alpha(const Tree& t) {
  Rooted r = root(t);
  std::vector<std::size_t> in(t.order());
  std::vector<std::size_t> out(t.order());
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const std::size_t v = *it;
    in[v] = 1;
    out[v] = 0;
    for (std::size_t c : r.children[v]) {
      in[v] += out[c];
      out[v] += std::max(in[c], out[c]);
    }
  }
  return std::max(in[0], out[0]);
}

std::size_t alpha_by_koenig(const Tree& t) { return t.order() - nu(t); }

std::size_t gamma(const Tree& t) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  Rooted r = root(t);
  // in: v in the set. covered: v not in the set but dominated by a child.
  // open: v not in the set and not dominated below (its parent must be in).
  std::vector<std::size_t> in(t.order());
  std::vector<std::size_t> covered(t.order());
  std::vector<std::size_t> open(t.order());
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const std::size_t v = *it;
    std::size_t in_v = 1;
    std::size_t open_v = 0;
    std::size_t covered_v = 0;
    std::size_t penalty = kInf;
    for (std::size_t c : r.children[v]) {
      in_v += std::min({in[c], covered[c], open[c]});
      open_v = std::min(kInf, open_v + covered[c]);
      const std::size_t cheapest = std::min(in[c], covered[c]);
      covered_v = std::min(kInf, covered_v + cheapest);
      penalty = std::min(penalty, in[c] - cheapest);
    }
    in[v] = in_v;
    open[v] = open_v;
    covered[v] = penalty >= kInf ? kInf : std::min(kInf, covered_v + penalty);
  }
  return std::min(in[0], covered[0]);
}

MatchingInvariants matching_invariants(const Tree& t) {
  return MatchingInvariants{nu(t), count_max_matchings(t), alpha(t), gamma(t)};
}

}  // namespace nulltree
