#include "sbn/reduction.hpp"

#include <algorithm>
#include <map>

#include "sbn/algorithms.hpp"
#include "sbn/errors.hpp"

namespace sbn {

GadgetMap gadget(const Graph& g, int k) {
  if (k < 1) throw DomainError("gadget: k must be at least 1");
  const int paths = 2 * k - 1;
  const auto edges = g.edges();
  const int total = g.order() + paths * static_cast<int>(edges.size());
  if (total > kMaxVertices) {
    throw GuardRefusal("gadget: output would have " + std::to_string(total) + " vertices (limit 64)");
  }
  GadgetMap h{g, k, Graph(total), {}};
  for (Vertex v = 0; v < g.order(); ++v) h.provenance.push_back({true, v, {-1, -1}, 0});
  Vertex next = g.order();
  for (Edge e : edges) {
    for (int copy = 1; copy <= paths; ++copy) {
      h.output.add_edge(e.first, next);
      h.output.add_edge(next, e.second);
      h.provenance.push_back({false, -1, e, copy});
      ++next;
    }
  }
  return h;
}

namespace {

// Vertices outside S + v reachable from v through S.
VertexSet elimination_neighbours(const Graph& g, VertexSet s, Vertex v) {
  VertexSet reached = VertexSet::singleton(v);
  VertexSet frontier = reached;
  VertexSet out;
  while (!frontier.empty()) {
    VertexSet around = g.neighbors(frontier) - reached;
    out |= around - s;
    frontier = around & s;
    reached |= around;
  }
  return out;
}

}  // namespace

namespace {

// Contracts every tree edge whose one bag is inside the other; classic
// validity and width are unchanged.
Decomposition drop_subset_bags(const Decomposition& d) {
  const int n = d.node_count();
  std::vector<VertexSet> adj(n);
  for (int t = 0; t < n; ++t) adj[t] = d.tree.neighbors(t);
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n && !changed; ++a) {
      if (!alive[a]) continue;
      for (Vertex b : adj[a]) {
        if (!d.bags[a].subset_of(d.bags[b])) continue;
        for (Vertex c : adj[a]) {
          adj[c].erase(a);
          if (c != b) {
            adj[c].insert(b);
            adj[b].insert(c);
          }
        }
        adj[a] = VertexSet{};
        alive[a] = false;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> index(n, -1);
  Decomposition out;
  for (int t = 0; t < n; ++t) {
    if (!alive[t]) continue;
    index[t] = static_cast<int>(out.bags.size());
    out.bags.push_back(d.bags[t]);
  }
  out.tree = Graph(static_cast<int>(out.bags.size()));
  for (int t = 0; t < n; ++t) {
    for (Vertex u : adj[t]) {
      if (t < u) out.tree.add_edge(index[t], index[u]);
    }
  }
  return out;
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, const Limits& limits) {
  enforce_guard("treewidth_exact", g.order(), limits.treewidth);
  const int n = g.order();
  if (n == 0) return {-1, Decomposition{Graph(1), {VertexSet{}}}};
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // tw[S]: best width of eliminating exactly S first; last[S] the final vertex.
  std::vector<int> tw(full + 1, n);
  std::vector<signed char> last(full + 1, -1);
  tw[0] = -1;
  for (std::uint64_t bits = 1; bits <= full; ++bits) {
    VertexSet s = VertexSet::from_bits(bits);
    for (Vertex v : s) {
      VertexSet rest = s - VertexSet::singleton(v);
      int q = elimination_neighbours(g, rest, v).size();
      int w = std::max(tw[rest.bits()], q);
      if (w < tw[bits]) {
        tw[bits] = w;
        last[bits] = static_cast<signed char>(v);
      }
    }
  }
  std::vector<Vertex> order(n);
  std::uint64_t bits = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = last[bits];
    bits &= ~(std::uint64_t{1} << order[i]);
  }
  // Bag of v: v with its neighbours at elimination time; its parent is the
  // earliest-eliminated of those neighbours.
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<VertexSet> bags(n);
  std::vector<Edge> edges;
  VertexSet eliminated;
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet q = elimination_neighbours(g, eliminated, v);
    bags[i] = q | VertexSet::singleton(v);
    if (q.empty()) {
      roots.push_back(i);
    } else {
      int parent = n;
      for (Vertex w : q) parent = std::min(parent, position[w]);
      edges.emplace_back(i, parent);
    }
    eliminated.insert(v);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) edges.emplace_back(roots[i - 1], roots[i]);
  TreewidthResult result{tw[full], drop_subset_bags(Decomposition{Graph::from_edges(n, edges), bags})};
  if (!validate_classic(g, result.witness).valid || classic_width(result.witness) != result.value) {
    throw InternalError("treewidth_exact: witness failed validation");
  }
  return result;
}

bool adjacency_bag_lemma_check(const GadgetMap& h, const Decomposition& d) {
  auto verdict = validate_ltd(h.output, d);
  if (!verdict.valid) {
    throw PreconditionError("adjacency_bag_lemma_check: invalid decomposition (" + verdict.reason + ")");
  }
  if (d.width() > h.k) {
    throw PreconditionError("adjacency_bag_lemma_check: width " + std::to_string(d.width()) +
                            " exceeds k = " + std::to_string(h.k));
  }
  for (auto [u, v] : h.source.edges()) {
    if (!trace(d, u).intersects(trace(d, v))) return false;
  }
  return true;
}

Decomposition forward_gadget_decomposition(const GadgetMap& h, const Decomposition& classic) {
  auto verdict = validate_classic(h.source, classic);
  if (!verdict.valid) {
    throw PreconditionError("forward_gadget_decomposition: invalid classic decomposition (" +
                            verdict.reason + ")");
  }
  if (classic.width() > h.k) {
    throw PreconditionError("forward_gadget_decomposition: classic width exceeds k - 1");
  }
  std::map<int, std::vector<Vertex>> hung;
  for (Vertex v = h.source.order(); v < h.output.order(); ++v) {
    const Edge e = h.provenance[v].edge;
    int host = -1;
    for (int t = 0; t < classic.tree.order() && host < 0; ++t) {
      if (classic.bags[t].contains(e.first) && classic.bags[t].contains(e.second)) host = t;
    }
    hung[host].push_back(v);
  }
  std::vector<VertexSet> bags = classic.bags;
  std::vector<Edge> edges = classic.tree.edges();
  for (auto& [host, points] : hung) {
    for (std::size_t i = 0; i < points.size(); i += h.k) {
      VertexSet leaf;
      for (std::size_t j = i; j < std::min(points.size(), i + h.k); ++j) leaf.insert(points[j]);
      edges.emplace_back(host, static_cast<int>(bags.size()));
      bags.push_back(leaf);
    }
  }
  if (static_cast<int>(bags.size()) > kMaxVertices) {
    throw GuardRefusal("forward_gadget_decomposition: more than 64 tree nodes");
  }
  return Decomposition{Graph::from_edges(static_cast<int>(bags.size()), edges), bags};
}

ReductionSides reduction_sides(const Graph& g, int k, const Limits& limits) {
  if (k < 2) throw PreconditionError("verify_reduction: k must be at least 2");
  GadgetMap h = gadget(g, k);
  enforce_guard("verify_reduction (gadget)", h.output.order(), limits.lenient_search);
  ReductionSides sides;
  sides.treewidth_side = treewidth_exact(g, limits).value <= k - 1;
  auto d = decide_width_le_k(h.output, k, limits);
  sides.sbn_side = d.has_value();
  if (d && !adjacency_bag_lemma_check(h, *d)) {
    throw InternalError("verify_reduction: adjacent source vertices share no bag");
  }
  return sides;
}

bool verify_reduction(const Graph& g, int k, const Limits& limits) {
  auto sides = reduction_sides(g, k, limits);
  return sides.treewidth_side == sides.sbn_side;
}

}  // namespace sbn
