#include "sbn/lenient.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "sbn/algorithms.hpp"
#include "sbn/errors.hpp"

namespace sbn {

int Decomposition::width() const {
  int w = 0;
  for (VertexSet b : bags) w = std::max(w, b.size());
  return w;
}

const char* to_string(DecompositionKind kind) {
  return kind == DecompositionKind::kLenient ? "lenient" : "classic";
}

namespace {

void check_structure(const Graph& g, const Decomposition& d) {
  if (static_cast<int>(d.bags.size()) != d.tree.order()) {
    throw StructuralError("decomposition has " + std::to_string(d.bags.size()) + " bags for " +
                          std::to_string(d.tree.order()) + " tree nodes");
  }
  for (int t = 0; t < d.tree.order(); ++t) {
    if (!d.bags[t].subset_of(g.vertices())) {
      throw StructuralError("bag of node " + std::to_string(t) + " has a vertex outside the graph");
    }
  }
}

DecompositionVerdict fail(const std::string& condition, const std::string& reason) {
  return {false, condition, reason};
}

std::string edge_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

DecompositionVerdict validate_common(const Graph& g, const Decomposition& d, bool lenient) {
  check_structure(g, d);
  const Graph& t = d.tree;
  if (t.order() == 0) return fail("tree", "the tree has no nodes");
  if (!is_connected(t) || t.edge_count() != t.order() - 1) return fail("tree", "the tree graph is not a tree");
  std::vector<VertexSet> traces(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    traces[v] = trace(d, v);
    if (traces[v].empty()) return fail("C1", "vertex " + std::to_string(v) + " is in no bag");
  }
  for (auto [u, v] : g.edges()) {
    bool ok = traces[u].intersects(traces[v]);
    if (lenient) ok = ok || t.neighbors(traces[u]).intersects(traces[v]);
    if (!ok) {
      return fail("C2", lenient ? "edge " + edge_name(u, v) + " lies in no union of two close bags"
                                : "edge " + edge_name(u, v) + " lies in no bag");
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_connected_set(t, traces[v])) {
      return fail("C3", "trace of vertex " + std::to_string(v) + " is disconnected");
    }
  }
  return {};
}

}  // namespace

DecompositionVerdict validate_ltd(const Graph& g, const Decomposition& d) {
  return validate_common(g, d, true);
}

DecompositionVerdict validate_classic(const Graph& g, const Decomposition& d) {
  return validate_common(g, d, false);
}

DecompositionVerdict validate(const Graph& g, const Decomposition& d, DecompositionKind kind) {
  return kind == DecompositionKind::kLenient ? validate_ltd(g, d) : validate_classic(g, d);
}

VertexSet trace(const Decomposition& d, Vertex v) {
  VertexSet out;
  for (int t = 0; t < static_cast<int>(d.bags.size()); ++t) {
    if (d.bags[t].contains(v)) out.insert(t);
  }
  return out;
}

VertexSet petal(const Decomposition& d, int leaf) {
  if (d.tree.order() < 2) throw DomainError("petal: a one-node tree has no petals");
  if (leaf < 0 || leaf >= d.tree.order() || d.tree.degree(leaf) != 1) {
    throw DomainError("petal: node " + std::to_string(leaf) + " is not a leaf");
  }
  return d.bags[leaf] - d.bags[d.tree.neighbors(leaf).first()];
}

namespace {

// Drops `gone` and renumbers the remaining nodes in order; `extra` edges are
// given in old numbering and added after removal.
Decomposition remove_node(const Decomposition& d, int gone, const std::vector<Edge>& extra) {
  const int n = d.tree.order();
  std::vector<int> index(n, -1);
  int next = 0;
  for (int t = 0; t < n; ++t) {
    if (t != gone) index[t] = next++;
  }
  Decomposition out{Graph(n - 1), {}};
  for (int t = 0; t < n; ++t) {
    if (t != gone) out.bags.push_back(d.bags[t]);
  }
  for (auto [a, b] : d.tree.edges()) {
    if (a != gone && b != gone) out.tree.add_edge(index[a], index[b]);
  }
  for (auto [a, b] : extra) out.tree.add_edge(index[a], index[b]);
  return out;
}

std::vector<int> leaf_neighbours(const Graph& tree, int t) {
  std::vector<int> out;
  for (int u : tree.neighbors(t)) {
    if (tree.degree(u) == 1) out.push_back(u);
  }
  return out;
}

// Nodes split by removing t: the component of T - t containing each neighbour.
std::vector<VertexSet> sides(const Graph& tree, int t) {
  return components_within(tree, tree.vertices() - VertexSet::singleton(t));
}

bool pad_once(Decomposition& d) {
  for (int t = 0; t < d.tree.order(); ++t) {
    for (int u : d.tree.neighbors(t)) {
      if (d.bags[t].size() < d.bags[u].size()) {
        d.bags[t].insert((d.bags[u] - d.bags[t]).first());
        return true;
      }
    }
  }
  return false;
}

bool delete_subset_once(Decomposition& d) {
  for (int t = 0; t < d.tree.order(); ++t) {
    for (int u : d.tree.neighbors(t)) {
      if (d.bags[t].subset_of(d.bags[u])) {
        std::vector<Edge> extra;
        for (int w : d.tree.neighbors(t)) {
          if (w != u) extra.emplace_back(w, u);
        }
        d = remove_node(d, t, extra);
        return true;
      }
    }
  }
  return false;
}

bool delete_degree_two_once(Decomposition& d) {
  for (int t = 0; t < d.tree.order(); ++t) {
    if (d.tree.degree(t) != 2) continue;
    int a = d.tree.neighbors(t).first();
    int b = d.tree.neighbors(t).last();
    if (d.bags[t].subset_of(d.bags[a] | d.bags[b])) {
      d = remove_node(d, t, {{a, b}});
      return true;
    }
  }
  return false;
}

bool merge_leaves_once(Decomposition& d) {
  const int k = d.width();
  for (int t = 0; t < d.tree.order(); ++t) {
    auto leaves = leaf_neighbours(d.tree, t);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        VertexSet merged = petal(d, leaves[i]) | petal(d, leaves[j]);
        if (merged.size() > k) continue;
        for (Vertex v : d.bags[t] - merged) {
          if (merged.size() >= d.bags[t].size()) break;
          merged.insert(v);
        }
        d.bags[leaves[i]] = merged;
        d = remove_node(d, leaves[j], {});
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ExtremeVerdict is_extreme(const Graph& g, const Decomposition& d) {
  (void)g;
  const int n = d.tree.order();
  for (int t = 0; t < n; ++t) {
    if (d.bags[t].size() != d.bags[0].size()) {
      return {false, "equal-size", "bags of nodes 0 and " + std::to_string(t) + " differ in size"};
    }
  }
  for (int t = 0; t < n; ++t) {
    for (int u = 0; u < n; ++u) {
      if (t != u && d.bags[t].subset_of(d.bags[u])) {
        return {false, "subset",
                "bag of node " + std::to_string(t) + " lies inside the bag of node " + std::to_string(u)};
      }
    }
  }
  for (int t = 0; t < n; ++t) {
    if (d.tree.degree(t) != 2) continue;
    auto parts = sides(d.tree, t);
    for (int a : parts[0]) {
      for (int b : parts[1]) {
        if (d.bags[t].subset_of(d.bags[a] | d.bags[b])) {
          return {false, "degree-2",
                  "bag of node " + std::to_string(t) + " lies inside the bags of nodes " +
                      std::to_string(a) + " and " + std::to_string(b)};
        }
      }
    }
  }
  const int k = d.width();
  for (int t = 0; t < n; ++t) {
    auto leaves = leaf_neighbours(d.tree, t);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        if ((petal(d, leaves[i]) | petal(d, leaves[j])).size() <= k) {
          return {false, "leaf-siblings",
                  "leaves " + std::to_string(leaves[i]) + " and " + std::to_string(leaves[j]) +
                      " have at most " + std::to_string(k) + " private vertices together"};
        }
      }
    }
  }
  return {};
}

Decomposition extremize(const Graph& g, const Decomposition& d) {
  auto verdict = validate_ltd(g, d);
  if (!verdict.valid) throw PreconditionError("extremize: invalid decomposition (" + verdict.reason + ")");
  Decomposition out = d;
  while (pad_once(out) || delete_subset_once(out) || delete_degree_two_once(out) ||
         merge_leaves_once(out)) {
  }
  if (!validate_ltd(g, out).valid || out.width() != d.width() || !is_extreme(g, out).extreme) {
    throw InternalError("extremize: rewrite engine produced a non-extreme result");
  }
  return out;
}

Graph completion(const Graph& g, const Decomposition& d) {
  check_structure(g, d);
  Graph out(g.order());
  auto clique = [&](VertexSet s) {
    for (Vertex u : s) {
      for (Vertex v : s) {
        if (u < v) out.add_edge(u, v);
      }
    }
  };
  for (VertexSet b : d.bags) clique(b);
  for (auto [a, b] : d.tree.edges()) clique(d.bags[a] | d.bags[b]);
  return out;
}

namespace {

std::vector<int> tree_parents(const Graph& tree, int root) {
  std::vector<int> parent(tree.order(), -1);
  parent[root] = root;
  std::deque<int> q{root};
  while (!q.empty()) {
    int t = q.front();
    q.pop_front();
    for (int u : tree.neighbors(t)) {
      if (parent[u] < 0) {
        parent[u] = t;
        q.push_back(u);
      }
    }
  }
  return parent;
}

}  // namespace

Decomposition amalgamated_restriction(const Graph& g, const Decomposition& d, VertexSet s,
                                      const Subgraph& c, int root) {
  check_structure(g, d);
  if (root < 0 || root >= d.tree.order()) throw StructuralError("amalgamated_restriction: no such node");
  if (!s.subset_of(c.members)) throw PreconditionError("amalgamated_restriction: S is not inside C");
  std::vector<VertexSet> host_bags(d.tree.order());
  for (int t = 0; t < d.tree.order(); ++t) host_bags[t] = d.bags[t] & c.members;
  // BFS from the root reaches the nearest trace node first; its tree path
  // back to the root is Z_x.
  auto parent = tree_parents(d.tree, root);
  std::vector<int> order{root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int u : d.tree.neighbors(order[i])) {
      if (parent[u] == order[i] && u != root) order.push_back(u);
    }
  }
  for (Vertex x : s) {
    VertexSet tr = trace(d, x);
    int nearest = -1;
    for (int t : order) {
      if (tr.contains(t)) {
        nearest = t;
        break;
      }
    }
    if (nearest < 0) throw PreconditionError("amalgamated_restriction: vertex of S in no bag");
    for (int t = nearest; ; t = parent[t]) {
      host_bags[t].insert(x);
      if (t == root) break;
    }
  }
  Decomposition out{d.tree, {}};
  for (VertexSet b : host_bags) out.bags.push_back(c.to_local(b));
  return out;
}

Decomposition s_amalgamation(const Graph& g, const std::vector<AmalgamationPart>& parts, VertexSet s) {
  if (s.empty()) throw PreconditionError("s_amalgamation: S must be nonempty");
  if (!s.subset_of(g.vertices())) throw StructuralError("s_amalgamation: S is outside the graph");
  std::vector<std::uint64_t> expected;
  for (VertexSet c : components_within(g, g.vertices() - s)) expected.push_back((c | s).bits());
  std::vector<std::uint64_t> given;
  for (const auto& p : parts) given.push_back(p.component.members.bits());
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (expected != given) {
    throw StructuralError("s_amalgamation: parts are not the augmented components of G - S");
  }
  int total = 1;
  for (const auto& p : parts) total += p.decomposition.tree.order();
  if (total > kMaxVertices) throw GuardRefusal("s_amalgamation: more than 64 tree nodes");
  Decomposition out{Graph(total), {}};
  const int centre = total - 1;
  int offset = 0;
  for (const auto& p : parts) {
    const Decomposition& d = p.decomposition;
    check_structure(p.component.graph, d);
    if (p.anchor < 0 || p.anchor >= d.tree.order()) throw StructuralError("s_amalgamation: no such anchor");
    if (!s.subset_of(p.component.to_host(d.bags[p.anchor]))) {
      throw PreconditionError("s_amalgamation: anchor bag does not contain S");
    }
    for (int t = 0; t < d.tree.order(); ++t) out.bags.push_back(p.component.to_host(d.bags[t]));
    for (auto [a, b] : d.tree.edges()) out.tree.add_edge(offset + a, offset + b);
    out.tree.add_edge(offset + p.anchor, centre);
    offset += d.tree.order();
  }
  out.bags.push_back(s);
  return out;
}

Decomposition trivial_decomposition(const Graph& g) {
  return Decomposition{Graph(1), {g.vertices()}};
}

namespace {

// Exact search. Solve(C) asks for a rooted decomposition of G[C + N(C)] whose
// root is attached to a parent bag containing N(C) and missing C. The root
// bag B must meet C, must contain N(w) & C for every w in N(C) - B (those
// edges can only be covered by the parent and the root), and every
// component D of C - B is solved below B (its neighbourhood lies in B).
class WidthSearch {
 public:
  WidthSearch(const Graph& g, int k) : g_(g), k_(k) {}

  bool solve(VertexSet c) {
    auto it = memo_.find(c.bits());
    if (it != memo_.end()) return it->second.has_value();
    memo_[c.bits()] = std::nullopt;  // recursion only reaches proper subsets
    for (VertexSet b : candidates(c)) {
      bool ok = true;
      for (VertexSet d : components_within(g_, c - b)) {
        if (!solve(d)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        memo_[c.bits()] = b;
        return true;
      }
    }
    return false;
  }

  // Appends the subtree for C and returns its root node.
  int build(VertexSet c, std::vector<VertexSet>& bags, std::vector<Edge>& edges) {
    VertexSet b = *memo_.at(c.bits());
    int node = static_cast<int>(bags.size());
    bags.push_back(b);
    for (VertexSet d : components_within(g_, c - b)) {
      int child = build(d, bags, edges);
      edges.emplace_back(node, child);
    }
    return node;
  }

 private:
  std::vector<VertexSet> candidates(VertexSet c) const {
    VertexSet n = g_.neighbors(c);
    std::vector<VertexSet> out;
    std::vector<Vertex> boundary = n.to_vector();
    const int nb = static_cast<int>(boundary.size());
    for (std::uint32_t mask = 0; mask < (1U << nb); ++mask) {
      VertexSet bn;
      for (int i = 0; i < nb; ++i) {
        if (mask & (1U << i)) bn.insert(boundary[i]);
      }
      VertexSet required;
      for (Vertex w : n - bn) required |= g_.neighbors(w) & c;
      VertexSet base = bn | required;
      if (base.size() > k_) continue;
      std::vector<Vertex> pool = (c - required).to_vector();
      add_extensions(base, pool, 0, k_ - base.size(), c, out);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return lex_less(a, b);
    });
    return out;
  }

  void add_extensions(VertexSet bag, const std::vector<Vertex>& pool, std::size_t from, int room,
                      VertexSet c, std::vector<VertexSet>& out) const {
    if (bag.intersects(c)) out.push_back(bag);
    if (room == 0) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      add_extensions(bag | VertexSet::singleton(pool[i]), pool, i + 1, room - 1, c, out);
    }
  }

  const Graph& g_;
  int k_;
  std::unordered_map<std::uint64_t, std::optional<VertexSet>> memo_;
};

}  // namespace

std::optional<Decomposition> decide_width_le_k(const Graph& g, int k, const Limits& limits) {
  enforce_guard("decide_width_le_k", g.order(), limits.lenient_search);
  if (g.order() == 0) return Decomposition{Graph(1), {VertexSet{}}};
  if (k <= 0) return std::nullopt;
  if (k >= g.order()) return trivial_decomposition(g);
  WidthSearch search(g, k);
  auto comps = connected_components(g);
  for (VertexSet c : comps) {
    if (!search.solve(c)) return std::nullopt;
  }
  std::vector<VertexSet> bags;
  std::vector<Edge> edges;
  int previous = -1;
  for (VertexSet c : comps) {
    int root = search.build(c, bags, edges);
    if (previous >= 0) edges.emplace_back(previous, root);
    previous = root;
  }
  if (static_cast<int>(bags.size()) > kMaxVertices) {
    throw GuardRefusal("decide_width_le_k: decomposition needs more than 64 nodes");
  }
  Decomposition d{Graph::from_edges(static_cast<int>(bags.size()), edges), bags};
  auto verdict = validate_ltd(g, d);
  if (!verdict.valid || d.width() > k) {
    throw InternalError("decide_width_le_k: produced an invalid decomposition (" + verdict.reason + ")");
  }
  return d;
}

std::pair<int, Decomposition> min_lenient_width(const Graph& g, const Limits& limits) {
  for (int k = 0;; ++k) {
    if (auto d = decide_width_le_k(g, k, limits)) return {k, *d};
  }
}

SbnResult sbn_exact(const Graph& g, const Limits& limits) {
  enforce_guard("sbn_exact (bramble side)", g.order(), limits.oracle);
  auto [value, upper] = min_lenient_width(g, limits);
  auto lower = find_bramble_of_order(g, value, BrambleMode::kStrict, limits);
  if (!lower) throw InternalError("sbn_exact: no bramble matches the decomposition width");
  if (!validate_bramble(g, *lower).valid || bramble_order(*lower).order != value) {
    throw InternalError("sbn_exact: bramble and decomposition certificates disagree");
  }
  return {value, *lower, upper};
}

LtpWitness ltp_witness(const Graph& g, const Decomposition& d) {
  auto verdict = validate_ltd(g, d);
  if (!verdict.valid) throw PreconditionError("ltp_witness: invalid decomposition (" + verdict.reason + ")");
  auto extreme = is_extreme(g, d);
  if (!extreme.extreme) throw PreconditionError("ltp_witness: decomposition is not extreme (" + extreme.reason + ")");
  const int k = std::max(1, d.width());
  Graph product = lexicographic_product(d.tree, complete_graph(k));
  std::vector<VertexSet> branch(g.order());
  for (int t = 0; t < d.tree.order(); ++t) {
    int rank = 0;
    for (Vertex v : d.bags[t]) branch[v].insert(t * k + rank++);
  }
  LtpWitness w{d.tree, k, MinorModel{g, product, branch}};
  if (!verify_minor_model(w.model)) throw InternalError("ltp_witness: model failed verification");
  return w;
}

}  // namespace sbn
