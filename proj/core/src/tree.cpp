#include "nulltree/tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "nulltree/error.hpp"

namespace nulltree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kVertexNotFound: return "VertexNotFound";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kEmptyBasis: return "EmptyBasis";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotCoreVertex: return "NotCoreVertex";
    case ErrorCode::kBadArity: return "BadArity";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kNotSupported: return "NotSupported";
    case ErrorCode::kNotSTree: return "NotSTree";
    case ErrorCode::kNotInternalSupport: return "NotInternalSupport";
    case ErrorCode::kNotAtom: return "NotAtom";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kBadCode: return "BadCode";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kSpanMismatch: return "SpanMismatch";
    case ErrorCode::kFormulaMismatch: return "FormulaMismatch";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::string id_text(VertexId v) { return std::to_string(v); }

}  // namespace

Tree Tree::from_edges(std::vector<VertexId> vertices,
                      const std::vector<Edge>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(ErrorCode::kParseError, "duplicate vertex label");
  }
  if (vertices.empty()) {
    throw Error(ErrorCode::kNotATree, "a tree needs at least one vertex");
  }
  Tree t;
  t.vertices_ = std::move(vertices);
  t.adjacency_.resize(t.vertices_.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kNotATree, "self-loop at " + id_text(e.u));
    }
    auto iu = t.find(e.u);
    auto iv = t.find(e.v);
    if (!iu || !iv) {
      throw Error(ErrorCode::kParseError, "edge " + id_text(e.u) + "-" +
                                              id_text(e.v) +
                                              " names an unknown vertex");
    }
    t.adjacency_[*iu].push_back(*iv);
    t.adjacency_[*iv].push_back(*iu);
  }
  for (auto& nbrs : t.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error(ErrorCode::kNotATree, "duplicate edge");
    }
  }
  if (edges.size() + 1 != t.vertices_.size()) {
    throw Error(ErrorCode::kNotATree,
                std::to_string(edges.size()) + " edges on " +
                    std::to_string(t.vertices_.size()) + " vertices");
  }
  auto dist = t.distances_from(0);
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
    throw Error(ErrorCode::kNotATree, "graph is disconnected");
  }
  return t;
}

Tree Tree::from_edges(const std::vector<Edge>& edges) {
  std::vector<VertexId> vertices;
  for (const Edge& e : edges) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return from_edges(std::move(vertices), edges);
}

Tree Tree::single(VertexId v) { return from_edges({v}, {}); }

std::optional<std::size_t> Tree::find(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Tree::index_of(VertexId v) const {
  auto i = find(v);
  if (!i) throw Error(ErrorCode::kVertexNotFound, "vertex " + id_text(v));
  return *i;
}

std::vector<VertexId> Tree::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (std::size_t j : adjacency_[index_of(v)]) out.push_back(vertices_[j]);
  return out;
}

bool Tree::adjacent(VertexId a, VertexId b) const {
  const auto& nbrs = adjacency_[index_of(a)];
  return std::binary_search(nbrs.begin(), nbrs.end(), index_of(b));
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j : adjacency_[i]) {
      if (i < j) out.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tree Tree::induced(std::span<const VertexId> subset) const {
  std::vector<VertexId> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Edge> kept_edges;
  for (VertexId v : keep) {
    std::size_t i = index_of(v);
    for (std::size_t j : adjacency_[i]) {
      if (vertices_[j] > v && std::binary_search(keep.begin(), keep.end(),
                                                 vertices_[j])) {
        kept_edges.emplace_back(v, vertices_[j]);
      }
    }
  }
  return from_edges(std::move(keep), kept_edges);
}

std::vector<std::size_t> Tree::distances_from(std::size_t index) const {
  std::vector<std::size_t> dist(order(), kUnreached);
  std::vector<std::size_t> queue{index};
  dist[index] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t i = queue[head];
    for (std::size_t j : adjacency_[i]) {
      if (dist[j] == kUnreached) {
        dist[j] = dist[i] + 1;
        queue.push_back(j);
      }
    }
  }
  return dist;
}

std::size_t Tree::distance(VertexId a, VertexId b) const {
  return distances_from(index_of(a))[index_of(b)];
}

Tree::Rooting Tree::rooted_at(std::size_t root_index) const {
  Rooting r;
  r.parent.assign(order(), kUnreached);
  r.parent[root_index] = root_index;
  r.order.reserve(order());
  r.order.push_back(root_index);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    std::size_t i = r.order[head];
    for (std::size_t j : adjacency_[i]) {
      if (r.parent[j] == kUnreached) {
        r.parent[j] = i;
        r.order.push_back(j);
      }
    }
  }
  return r;
}

Forest split(const Tree& t, const std::function<bool(VertexId)>& keep_vertex,
             const std::function<bool(const Edge&)>& keep_edge) {
  const std::size_t n = t.order();
  std::vector<char> kept(n);
  for (std::size_t i = 0; i < n; ++i) kept[i] = keep_vertex(t.vertex(i));
  std::vector<char> seen(n, 0);
  Forest out;
  for (std::size_t start = 0; start < n; ++start) {
    if (!kept[start] || seen[start]) continue;
    std::vector<std::size_t> stack{start};
    std::vector<VertexId> verts;
    std::vector<Edge> edges;
    seen[start] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      verts.push_back(t.vertex(i));
      for (std::size_t j : t.neighbor_indices(i)) {
        if (!kept[j]) continue;
        Edge e(t.vertex(i), t.vertex(j));
        if (!keep_edge(e)) continue;
        if (i < j) edges.push_back(e);
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    out.push_back(Tree::from_edges(std::move(verts), edges));
  }
  return out;
}

Forest induced_forest(const Tree& t, std::span<const VertexId> subset) {
  std::vector<VertexId> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  for (VertexId v : keep) t.index_of(v);
  return split(
      t, [&](VertexId v) { return sorted_contains(keep, v); },
      [](const Edge&) { return true; });
}

Tree subtree_toward(const Tree& t, VertexId u, VertexId v) {
  std::size_t iu = t.index_of(u);
  std::size_t iv = t.index_of(v);
  if (iu == iv) {
    throw Error(ErrorCode::kVertexNotFound, "subtree_toward needs u != v");
  }
  // x is on v's side iff the u-rooted path to x passes through v, i.e. v is
  // an ancestor-or-self of x when rooted at u.
  auto rooting = t.rooted_at(iu);
  std::vector<char> inside(t.order(), 0);
  inside[iv] = 1;
  std::vector<VertexId> verts;
  for (std::size_t i : rooting.order) {
    if (i != iu && inside[rooting.parent[i]]) inside[i] = 1;
    if (inside[i]) verts.push_back(t.vertex(i));
  }
  return t.induced(verts);
}

InOut in_out(std::span<const VertexId> u, std::span<const VertexId> v,
             const Tree& t) {
  std::vector<VertexId> us(u.begin(), u.end());
  std::vector<VertexId> vs(v.begin(), v.end());
  std::sort(us.begin(), us.end());
  std::sort(vs.begin(), vs.end());
  if (us.empty() || vs.empty()) {
    throw Error(ErrorCode::kVertexNotFound, "in_out needs nonempty sets");
  }
  for (VertexId x : us) t.index_of(x);
  for (VertexId x : vs) t.index_of(x);
  if (!sorted_intersection(us, vs).empty()) {
    throw Error(ErrorCode::kNotDisjoint, "in_out on overlapping subtrees");
  }
  // Multi-source BFS from V; the first vertex of U reached is the closest
  // one, and its BFS parent is the next vertex toward V.
  const std::size_t n = t.order();
  std::vector<std::size_t> dist(n, kUnreached);
  std::vector<std::size_t> parent(n, kUnreached);
  std::vector<std::size_t> queue;
  for (VertexId x : vs) {
    std::size_t i = t.index_of(x);
    dist[i] = 0;
    queue.push_back(i);
  }
  std::size_t best = kUnreached;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t i = queue[head];
    if (sorted_contains(us, t.vertex(i))) {
      best = i;
      break;
    }
    for (std::size_t j : t.neighbor_indices(i)) {
      if (dist[j] == kUnreached) {
        dist[j] = dist[i] + 1;
        parent[j] = i;
        queue.push_back(j);
      }
    }
  }
  return InOut{t.vertex(best), t.vertex(parent[best])};
}

InOut in_out(const Tree& u, const Tree& v, const Tree& t) {
  return in_out(u.vertices(), v.vertices(), t);
}

namespace {

bool parse_id(std::string_view token, VertexId& out) {
  if (token.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<VertexId> isolated;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    VertexId a = 0;
    VertexId b = 0;
    if (toks.size() == 1 && parse_id(toks[0], a)) {
      isolated.push_back(a);
    } else if (toks.size() == 2 && parse_id(toks[0], a) &&
               parse_id(toks[1], b)) {
      if (a == b) {
        throw Error(ErrorCode::kNotATree, "self-loop at " + id_text(a));
      }
      edges.emplace_back(a, b);
    } else {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
  }
  if (!isolated.empty()) {
    if (isolated.size() > 1 || !edges.empty()) {
      throw Error(ErrorCode::kNotATree,
                  "isolated vertex alongside other vertices");
    }
    return Tree::single(isolated.front());
  }
  if (edges.empty()) throw Error(ErrorCode::kParseError, "empty input");
  return Tree::from_edges(edges);
}

Tree parse_tree_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    std::vector<VertexId> vertices = doc.at("vertices").get<std::vector<VertexId>>();
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::kParseError, "edge must be a pair");
      }
      VertexId a = pair[0].get<VertexId>();
      VertexId b = pair[1].get<VertexId>();
      if (a == b) {
        throw Error(ErrorCode::kNotATree, "self-loop at " + id_text(a));
      }
      edges.emplace_back(a, b);
    }
    return Tree::from_edges(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Tree parse_tree(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_tree_json(text);
    break;
  }
  return parse_edge_list(text);
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_tree(buffer.str());
}

std::string to_edge_list(const Tree& t) {
  std::string out;
  if (t.order() == 1) return id_text(t.vertex(0)) + "\n";
  for (const Edge& e : t.edges()) {
    out += id_text(e.u) + " " + id_text(e.v) + "\n";
  }
  return out;
}

std::string to_json_text(const Tree& t) {
  nlohmann::json doc;
  doc["vertices"] = std::vector<VertexId>(t.vertices().begin(), t.vertices().end());
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : t.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = edges;
  return doc.dump();
}

bool sorted_contains(std::span<const VertexId> sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<VertexId> sorted_union(std::span<const VertexId> a,
                                   std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<VertexId> sorted_difference(std::span<const VertexId> a,
                                        std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<VertexId> sorted_intersection(std::span<const VertexId> a,
                                          std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace nulltree
