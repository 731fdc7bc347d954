#include "nulltree/bases.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "nulltree/error.hpp"
#include "nulltree/exact_linalg.hpp"

namespace nulltree {

namespace {

std::string set_string(const std::vector<VertexId>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

// Atom with its core flags, by dense index.
struct AtomView {
  const Tree& tree;
  std::vector<char> is_core;

  AtomView(const Tree& t, const Classification& c) : tree(t), is_core(t.order(), 0) {
    for (VertexId v : c.support.core) is_core[t.index_of(v)] = 1;
  }
};

Classification require_atom(const Tree& atom) {
  Classification c = classify(atom);
  if (!c.is_s_atom) throw Error(ErrorCode::kNotAtom, "input is not an S-atom");
  return c;
}

// Grows an S-basic vertex set inside the vertices flagged `allowed`.
std::vector<std::size_t> grow(const AtomView& a, const std::vector<char>& allowed,
                              std::size_t seed, ChoiceRule rule) {
  const Tree& t = a.tree;
  std::vector<char> in_b(t.order(), 0);
  std::vector<std::size_t> members;
  std::set<std::size_t> frontier;

  auto add = [&](std::size_t i) {
    in_b[i] = 1;
    members.push_back(i);
    frontier.erase(i);
    if (a.is_core[i]) return;
    for (std::size_t j : t.neighbor_indices(i)) {
      if (allowed[j] && !in_b[j] && a.is_core[j]) frontier.insert(j);
    }
  };
  auto uncovered_core_nearby = [&](std::size_t w, std::size_t from) {
    for (std::size_t j : t.neighbor_indices(w)) {
      if (j != from && allowed[j] && !in_b[j] && a.is_core[j]) return true;
    }
    return false;
  };
  auto choose = [&](std::size_t u) -> std::optional<std::size_t> {
    std::optional<std::size_t> first;
    for (std::size_t j : t.neighbor_indices(u)) {
      if (!allowed[j] || in_b[j]) continue;
      if (rule == ChoiceRule::kPreferUncoveredCore && uncovered_core_nearby(j, u)) return j;
      if (!first) first = j;
    }
    return first;
  };
  auto fail = [&](std::size_t u) {
    std::vector<VertexId> vs;
    for (std::size_t i : members) vs.push_back(t.vertex(i));
    std::sort(vs.begin(), vs.end());
    throw Error(ErrorCode::kValidationFailed,
                "core vertex " + std::to_string(t.vertex(u)) +
                    " has no fresh neighbor while growing " + set_string(vs));
  };

  add(seed);
  if (a.is_core[seed]) {
    for (int k = 0; k < 2; ++k) {
      auto w = choose(seed);
      if (!w) fail(seed);
      add(*w);
    }
  }
  while (!frontier.empty()) {
    const std::size_t u = *frontier.begin();
    add(u);
    auto w = choose(u);
    if (!w) fail(u);
    add(*w);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<VertexId> ids_of(const Tree& t, const std::vector<std::size_t>& indices) {
  std::vector<VertexId> out;
  for (std::size_t i : indices) out.push_back(t.vertex(i));
  std::sort(out.begin(), out.end());
  return out;
}

// Checks the S-basic shape of a subtree of the atom and fills in the pendant.
SBasicSubtree make_basic(const AtomView& a, Tree sub) {
  const Classification c = classify(sub);
  const std::vector<VertexId> vs(sub.vertices().begin(), sub.vertices().end());
  if (!c.is_s_basic) {
    throw Error(ErrorCode::kValidationFailed, "subtree " + set_string(vs) + " is not S-basic");
  }
  for (VertexId v : vs) {
    if (a.is_core[a.tree.index_of(v)] && sub.degree(v) != 2) {
      throw Error(ErrorCode::kValidationFailed, "core vertex " + std::to_string(v) +
                                                    " has degree " +
                                                    std::to_string(sub.degree(v)) +
                                                    " in " + set_string(vs));
    }
  }
  SBasicSubtree b{std::move(sub), a.tree.vertex(0), 0};
  for (VertexId v : c.support.supp) {
    if (b.tree.degree(v) == 1) {
      b.pendant = v;
      break;
    }
  }
  return b;
}

VertexVector alternating(const SBasicSubtree& b, const Tree& host) {
  VertexVector x(host);
  const std::vector<std::size_t> d = b.tree.distances_from(b.tree.index_of(b.pendant));
  for (std::size_t i = 0; i < b.tree.order(); ++i) {
    if (d[i] % 2 == 0) x.set(b.tree.vertex(i), (d[i] / 2) % 2 == 0 ? 1 : -1);
  }
  return x;
}

}  // namespace

SBasicSubtree sbsa(const Tree& atom, VertexId v, ChoiceRule rule) {
  const Classification c = require_atom(atom);
  if (atom.order() < 3) {
    throw Error(ErrorCode::kTooSmall, "atom of order " + std::to_string(atom.order()));
  }
  const std::size_t seed = atom.index_of(v);
  const AtomView a(atom, c);
  const std::vector<char> allowed(atom.order(), 1);
  const std::vector<VertexId> vs = ids_of(atom, grow(a, allowed, seed, rule));
  SBasicSubtree b = make_basic(a, atom.induced(vs));
  basic_vector(b, atom);
  return b;
}

BasicVector basic_vector(const SBasicSubtree& b, const Tree& host) {
  BasicVector out{alternating(b, host), b};
  if (!in_kernel(host, out.vector)) {
    throw Error(ErrorCode::kValidationFailed,
                "basic vector " + out.vector.debug_string() + " of subtree " +
                    set_string({b.tree.vertices().begin(), b.tree.vertices().end()}) +
                    " is not in the kernel of the host");
  }
  return out;
}

namespace {

class ForestBuilder {
 public:
  ForestBuilder(const Tree& atom, const Classification& c)
      : a_(atom, c), atom_(atom), used_(atom.order(), 0) {
    result_.columns.assign(atom.vertices().begin(), atom.vertices().end());
  }

  ForestBasis run(std::size_t first_seed) {
    std::vector<char> all(atom_.order(), 1);
    seed_step(all, first_seed);
    for (;;) {
      exhaust_pendants();
      if (!next_component()) break;
    }
    return std::move(result_);
  }

 private:
  // (a) seed a basic with sbsa on H.
  void seed_step(const std::vector<char>& h, std::size_t seed) {
    const std::vector<std::size_t> b = grow(a_, h, seed, ChoiceRule::kSmallestId);
    std::vector<int> row(atom_.order(), 0);
    for (std::size_t i : b) {
      if (!used_[i]) row[i] = a_.is_core[i] ? -1 : 1;
    }
    emit(b, std::move(row));
  }

  // (b) and (c): fresh pendant supported vertices next to used core vertices.
  void exhaust_pendants() {
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t v = 0; v < atom_.order(); ++v) {
        if (used_[v] || atom_.neighbor_indices(v).size() != 1) continue;
        const std::size_t x = atom_.neighbor_indices(v)[0];
        if (!used_[x]) continue;
        std::vector<int> row(atom_.order(), 0);
        row[v] = 1;
        emit(swap_or_graft(v, x), std::move(row));
        progress = true;
        break;
      }
    }
  }

  std::vector<std::size_t> swap_or_graft(std::size_t v, std::size_t x) {
    const std::vector<char>& latest = members_.back();
    if (latest[x]) {
      for (std::size_t l : atom_.neighbor_indices(x)) {
        if (latest[l] && atom_.neighbor_indices(l).size() == 1) {
          std::vector<std::size_t> b;
          for (std::size_t i = 0; i < atom_.order(); ++i) {
            if (latest[i] && i != l) b.push_back(i);
          }
          b.push_back(v);
          std::sort(b.begin(), b.end());
          return b;
        }
      }
    }
    const std::vector<char>& host = members_[containing(x)];
    std::vector<std::size_t> b = branch(host, x);
    b.push_back(x);
    b.push_back(v);
    std::sort(b.begin(), b.end());
    return b;
  }

  // (d)-(g): seed the next basic on a component G of atom - U, with the
  // branch of a basic through the attaching core vertex grafted on.
  bool next_component() {
    std::vector<VertexId> used_ids;
    for (std::size_t i = 0; i < atom_.order(); ++i) {
      if (used_[i]) used_ids.push_back(atom_.vertex(i));
    }
    if (used_ids.size() == atom_.order()) return false;
    const Forest rest = split(
        atom_, [&](VertexId v) { return !used_[atom_.index_of(v)]; },
        [](const Edge&) { return true; });

    std::optional<InOut> best;
    const Tree* best_g = nullptr;
    for (const Tree& g : rest) {
      const InOut io = in_out(g.vertices(), used_ids, atom_);
      std::size_t links = 0;
      for (VertexId v : g.vertices()) {
        for (std::size_t j : atom_.neighbor_indices(atom_.index_of(v))) links += used_[j];
      }
      if (links != 1 || a_.is_core[atom_.index_of(io.in)] || !a_.is_core[atom_.index_of(io.out)]) {
        throw Error(ErrorCode::kValidationFailed,
                    "component " + set_string({g.vertices().begin(), g.vertices().end()}) +
                        " does not attach to the used set through one supp-core edge");
      }
      if (!best || io.in < best->in) {
        best = io;
        best_g = &g;
      }
    }
    const std::size_t s = atom_.index_of(best->in);
    const std::size_t c = atom_.index_of(best->out);
    std::vector<char> h(atom_.order(), 0);
    for (VertexId v : best_g->vertices()) h[atom_.index_of(v)] = 1;
    h[c] = 1;
    for (std::size_t i : branch(members_[containing(c)], c)) h[i] = 1;
    seed_step(h, s);
    return true;
  }

  // Most recent basic containing vertex i.
  std::size_t containing(std::size_t i) const {
    for (std::size_t j = members_.size(); j-- > 0;) {
      if (members_[j][i]) return j;
    }
    throw Error(ErrorCode::kValidationFailed,
                "vertex " + std::to_string(atom_.vertex(i)) + " lies in no basic");
  }

  // B(x -> w) for the smallest neighbor w of x inside the basic.
  std::vector<std::size_t> branch(const std::vector<char>& basic, std::size_t x) const {
    std::optional<std::size_t> w;
    for (std::size_t j : atom_.neighbor_indices(x)) {
      if (basic[j]) {
        w = j;
        break;
      }
    }
    std::vector<std::size_t> out;
    if (!w) return out;
    std::vector<char> seen(atom_.order(), 0);
    seen[x] = 1;
    seen[*w] = 1;
    std::vector<std::size_t> stack{*w};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      out.push_back(i);
      for (std::size_t j : atom_.neighbor_indices(i)) {
        if (basic[j] && !seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    return out;
  }

  void emit(const std::vector<std::size_t>& b, std::vector<int> row) {
    SBasicSubtree basic = make_basic(a_, atom_.induced(ids_of(atom_, b)));
    BasicVector vec = basic_vector(basic, atom_);
    std::vector<char> flags(atom_.order(), 0);
    for (std::size_t i : b) {
      flags[i] = 1;
      used_[i] = 1;
    }
    members_.push_back(std::move(flags));
    result_.basics.push_back(std::move(basic));
    result_.vectors.push_back(std::move(vec));
    result_.mc.push_back(std::move(row));
  }

  AtomView a_;
  const Tree& atom_;
  std::vector<char> used_;
  std::vector<std::vector<char>> members_;
  ForestBasis result_;
};

}  // namespace

ForestBasis s_basis_forest(const Tree& atom) {
  const Classification c = require_atom(atom);
  if (atom.order() == 1) {
    const VertexId v = atom.vertex(0);
    ForestBasis fb;
    fb.columns = {v};
    fb.mc = {{1}};
    SBasicSubtree b{atom, v, v};
    fb.vectors.push_back(BasicVector{VertexVector::unit(atom, v), b});
    fb.basics.push_back(std::move(b));
    return fb;
  }

  ForestBasis fb = ForestBuilder(atom, c).run(atom.index_of(c.support.supp.front()));

  const std::size_t expected = c.support.supp.size() - c.support.core.size();
  if (fb.basics.size() != expected) {
    throw Error(ErrorCode::kValidationFailed,
                "forest has " + std::to_string(fb.basics.size()) + " basics, expected " +
                    std::to_string(expected));
  }
  std::vector<VertexVector> vs;
  for (const BasicVector& b : fb.vectors) vs.push_back(b.vector);
  const KernelBasis k = kernel(adjacency_matrix(atom));
  if (rank(vs) != vs.size() || !span_equal(vs, k.vectors)) {
    throw Error(ErrorCode::kSpanMismatch, "forest basis does not span the kernel of the atom " +
                                              set_string(fb.columns));
  }
  return fb;
}

namespace {

void require_column_span(const Tree& t, const RangeBasis& r, const char* what) {
  const std::vector<VertexVector> cols = adjacency_matrix(t).columns();
  if (rank(r.vectors) != r.vectors.size() || !span_equal(r.vectors, cols)) {
    throw Error(ErrorCode::kSpanMismatch, std::string(what) + " does not span the column space");
  }
}

void append_atom_range(const Tree& atom, const SupportCore& sc, const Tree& target,
                       RangeBasis& out) {
  for (VertexId v : sc.core) {
    out.vectors.push_back(VertexVector::unit(target, v));
    out.roles.push_back(RangeRole::kCoreSingleton);
    out.anchors.push_back(v);
    out.vectors.push_back(VertexVector::indicator(target, bouquet(atom, sc, v)));
    out.roles.push_back(RangeRole::kBouquet);
    out.anchors.push_back(v);
  }
}

}  // namespace

RangeBasis atom_range_basis(const Tree& atom) {
  const Classification c = require_atom(atom);
  RangeBasis r;
  append_atom_range(atom, c.support, atom, r);
  require_column_span(atom, r, "atom range basis");
  return r;
}

std::vector<BasicVector> tree_null_basis(const Tree& t) {
  const AtomSet atoms = a_set(t);
  std::vector<BasicVector> out;
  for (const Atom& atom : atoms.atoms) {
    ForestBasis fb = s_basis_forest(atom.tree);
    for (BasicVector& b : fb.vectors) {
      b.vector = lift(b.vector, t);
      out.push_back(std::move(b));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const BasicVector& a, const BasicVector& b) {
    return a.vector.support().front() < b.vector.support().front();
  });

  std::vector<VertexVector> vs;
  for (const BasicVector& b : out) vs.push_back(b.vector);
  const KernelBasis k = kernel(adjacency_matrix(t));
  if (vs.size() != k.nullity() || !span_equal(vs, k.vectors)) {
    throw Error(ErrorCode::kSpanMismatch, "null basis of " + std::to_string(vs.size()) +
                                              " vectors does not span the kernel of nullity " +
                                              std::to_string(k.nullity()));
  }
  return out;
}

RangeBasis tree_range_basis(const Tree& t) {
  const NullDecomposition d = decompose(t);
  const AtomSet atoms = a_set(d);
  RangeBasis r;
  for (const Atom& atom : atoms.atoms) {
    append_atom_range(atom.tree, SupportCore{atom.supp, atom.core}, t, r);
  }
  std::vector<VertexId> n_vertices;
  for (const Tree& n : d.n_parts) {
    n_vertices.insert(n_vertices.end(), n.vertices().begin(), n.vertices().end());
  }
  std::sort(n_vertices.begin(), n_vertices.end());
  for (VertexId u : n_vertices) {
    r.vectors.push_back(VertexVector::unit(t, u));
    r.roles.push_back(RangeRole::kNPartStandard);
    r.anchors.push_back(u);
  }
  require_column_span(t, r, "range basis");
  return r;
}

}  // namespace nulltree
