#include "sbn/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sbn/errors.hpp"

namespace sbn {

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::singleton(rest.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = g.neighbors(frontier) & rest;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

int connectivity_degree(const Graph& g, VertexSet s) {
  return static_cast<int>(components_within(g, g.vertices() - s).size());
}

std::vector<Subgraph> augmented_components(const Graph& g, VertexSet s) {
  std::vector<Subgraph> out;
  for (VertexSet c : components_within(g, g.vertices() - s)) {
    out.push_back(induced_subgraph(g, c | s));
  }
  return out;
}

bool is_connected_set(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  VertexSet comp = VertexSet::singleton(s.first());
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next = (g.neighbors(frontier) & s) - comp;
    comp |= next;
    frontier = next;
  }
  return comp == s;
}

bool is_connected(const Graph& g) { return is_connected_set(g, g.vertices()); }

std::vector<VertexSet> connected_sets(const Graph& g, const Limits& limits) {
  enforce_guard("connected_sets", g.order(), limits.exponential);
  std::vector<VertexSet> out;
  const std::uint64_t top = g.order() == 0 ? 0 : (std::uint64_t{1} << g.order());
  for (std::uint64_t bits = 1; bits < top; ++bits) {
    VertexSet s = VertexSet::from_bits(bits);
    if (is_connected_set(g, s)) out.push_back(s);
  }
  return out;
}

bool separates(const Graph& g, VertexSet s, Vertex x, Vertex y) {
  if (s.contains(x) || s.contains(y)) return false;
  for (VertexSet c : components_within(g, g.vertices() - s)) {
    if (c.contains(x)) return !c.contains(y);
  }
  return false;
}

std::vector<VertexSet> full_components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  for (VertexSet c : components_within(g, g.vertices() - s)) {
    if (g.neighbors(c) == s) out.push_back(c);
  }
  return out;
}

bool is_minimal_separator_for(const Graph& g, VertexSet s, Vertex x, Vertex y) {
  if (!separates(g, s, x, y)) return false;
  bool has_x = false;
  bool has_y = false;
  for (VertexSet c : full_components(g, s)) {
    has_x = has_x || c.contains(x);
    has_y = has_y || c.contains(y);
  }
  return has_x && has_y;
}

namespace {

// Berry, Bordat and Cogis: closing the family {N(C) : C in cc(G - N[v])}
// under S -> {N(C) : C in cc(G - (S + N(x)))}, x in S, yields exactly the
// minimal separators of a connected graph.
void separators_of_connected(const Graph& g, VertexSet within, const Limits& limits,
                             std::set<std::uint64_t>& found) {
  std::deque<VertexSet> queue;
  auto offer = [&](VertexSet s) {
    if (s.empty()) return;
    if (found.insert(s.bits()).second) {
      if (static_cast<std::int64_t>(found.size()) > limits.separator_cap) {
        throw GuardRefusal("minimal_separators: more than " +
                           std::to_string(limits.separator_cap) + " separators");
      }
      queue.push_back(s);
    }
  };
  for (Vertex v : within) {
    VertexSet closed = (g.neighbors(v) & within) | VertexSet::singleton(v);
    for (VertexSet c : components_within(g, within - closed)) offer(g.neighbors(c) & within);
  }
  while (!queue.empty()) {
    VertexSet s = queue.front();
    queue.pop_front();
    for (Vertex x : s) {
      VertexSet removed = s | (g.neighbors(x) & within);
      for (VertexSet c : components_within(g, within - removed)) offer(g.neighbors(c) & within);
    }
  }
}

}  // namespace

std::vector<VertexSet> minimal_separators(const Graph& g, const Limits& limits) {
  std::set<std::uint64_t> found;
  auto comps = connected_components(g);
  for (VertexSet c : comps) separators_of_connected(g, c, limits, found);
  std::vector<VertexSet> out;
  if (comps.size() > 1) out.push_back(VertexSet{});
  for (auto bits : found) out.push_back(VertexSet::from_bits(bits));
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

namespace {

// Unit-capacity augmenting-path max flow on a dense capacity matrix.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : n_(nodes), cap_(nodes * nodes, 0), flow_(nodes * nodes, 0) {}
  void add_arc(int u, int v, int c) { cap_[u * n_ + v] += c; }
  // Unused capacity plus opposite flow that could be cancelled.
  int residual(int u, int v) const { return cap_[u * n_ + v] - flow_[u * n_ + v] + flow_[v * n_ + u]; }
  int flow(int u, int v) const { return flow_[u * n_ + v]; }

  int max_flow(int s, int t) {
    int total = 0;
    for (;;) {
      std::vector<int> parent(n_, -1);
      parent[s] = s;
      std::deque<int> q{s};
      while (!q.empty() && parent[t] < 0) {
        int u = q.front();
        q.pop_front();
        for (int v = 0; v < n_; ++v) {
          if (parent[v] < 0 && residual(u, v) > 0) {
            parent[v] = u;
            q.push_back(v);
          }
        }
      }
      if (parent[t] < 0) return total;
      for (int v = t; v != s; v = parent[v]) {
        int u = parent[v];
        // Cancel opposite flow first.
        if (flow_[v * n_ + u] > 0) {
          --flow_[v * n_ + u];
        } else {
          ++flow_[u * n_ + v];
        }
      }
      ++total;
    }
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(n_, false);
    seen[s] = true;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < n_; ++v) {
        if (!seen[v] && residual(u, v) > 0) {
          seen[v] = true;
          q.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  int n_;
  std::vector<int> cap_;
  std::vector<int> flow_;
};

}  // namespace

DisjointPaths disjoint_paths(const Graph& g, VertexSet x, VertexSet y) {
  if (x.empty() || y.empty()) throw PreconditionError("disjoint_paths: X and Y must be nonempty");
  if (!x.subset_of(g.vertices()) || !y.subset_of(g.vertices())) {
    throw StructuralError("disjoint_paths: terminal set outside the graph");
  }
  const int n = g.order();
  const int big = n + 1;
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(in(v), out(v), 1);
    for (Vertex w : g.neighbors(v)) net.add_arc(out(v), in(w), big);
  }
  for (Vertex v : x) net.add_arc(source, in(v), big);
  for (Vertex v : y) net.add_arc(out(v), sink, big);
  const int value = net.max_flow(source, sink);

  DisjointPaths result;
  // Decompose: each unit leaves the source into some in(v) and follows flow.
  std::vector<int> used(4 * (n + 1) * (n + 1), 0);
  auto take = [&](int u, int v) {
    int& t = used[u * (2 * n + 2) + v];
    if (net.flow(u, v) - t > 0) {
      ++t;
      return true;
    }
    return false;
  };
  for (Vertex start : x) {
    while (take(source, in(start))) {
      std::vector<Vertex> path;
      Vertex cur = start;
      for (;;) {
        path.push_back(cur);
        if (!take(in(cur), out(cur))) throw InternalError("disjoint_paths: broken flow");
        if (y.contains(cur) && take(out(cur), sink)) break;
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur)) {
          if (take(out(cur), in(w))) {
            next = w;
            break;
          }
        }
        if (next < 0) throw InternalError("disjoint_paths: flow does not reach the sink");
        cur = next;
      }
      result.paths.push_back(std::move(path));
    }
  }
  auto seen = net.reachable(source);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[in(v)] && !seen[out(v)]) result.separator.insert(v);
  }
  if (static_cast<int>(result.paths.size()) != value || result.separator.size() != value) {
    throw InternalError("disjoint_paths: Menger duality check failed");
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

int local_connectivity(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw PreconditionError("local_connectivity: endpoints must differ");
  const int n = g.order();
  const int big = n + 1;
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(in(v), out(v), (v == x || v == y) ? big : 1);
    for (Vertex w : g.neighbors(v)) net.add_arc(out(v), in(w), 1);
  }
  return net.max_flow(out(x), in(y));
}

ChordalityReport is_chordal(const Graph& g) {
  const int n = g.order();
  ChordalityReport report;
  // Maximum cardinality search; the reverse visiting order is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> weight(n, 0);
  VertexSet visited;
  std::vector<Vertex> visit;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited.contains(v) && (best < 0 || weight[v] > weight[best])) best = v;
    }
    visited.insert(best);
    visit.push_back(best);
    for (Vertex w : g.neighbors(best)) ++weight[w];
  }
  std::vector<Vertex> order(visit.rbegin(), visit.rend());
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  bool peo = true;
  std::vector<VertexSet> later(n);
  for (int i = 0; i < n && peo; ++i) {
    Vertex v = order[i];
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > i) later[v].insert(w);
    }
    for (Vertex a : later[v]) {
      if (!(later[v] - VertexSet::singleton(a)).subset_of(g.neighbors(a))) {
        peo = false;
        break;
      }
    }
  }
  report.chordal = peo;
  if (peo) {
    report.elimination_order = order;
    std::vector<VertexSet> candidates;
    for (Vertex v = 0; v < n; ++v) candidates.push_back(later[v] | VertexSet::singleton(v));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
        if (i == j) continue;
        bool proper = candidates[i].subset_of(candidates[j]) && candidates[i] != candidates[j];
        bool equal_earlier = candidates[i] == candidates[j] && j < i;
        dominated = proper || equal_earlier;
      }
      if (!dominated) report.maximal_cliques.push_back(candidates[i]);
    }
    std::sort(report.maximal_cliques.begin(), report.maximal_cliques.end(), LexLess{});
    return report;
  }
  // Witness: a hole through v, two non-adjacent neighbours u, w of v and a
  // shortest u-w path whose interior avoids N[v].
  for (Vertex v = 0; v < n; ++v) {
    VertexSet closed = g.neighbors(v) | VertexSet::singleton(v);
    for (Vertex u : g.neighbors(v)) {
      for (Vertex w : g.neighbors(v)) {
        if (w <= u || g.adjacent(u, w)) continue;
        VertexSet allowed = (g.vertices() - closed) | VertexSet{u, w};
        std::vector<Vertex> parent(n, -1);
        parent[u] = u;
        std::deque<Vertex> q{u};
        while (!q.empty() && parent[w] < 0) {
          Vertex a = q.front();
          q.pop_front();
          for (Vertex b : g.neighbors(a) & allowed) {
            if (parent[b] < 0) {
              parent[b] = a;
              q.push_back(b);
            }
          }
        }
        if (parent[w] < 0) continue;
        std::vector<Vertex> cycle{v};
        for (Vertex a = w; a != u; a = parent[a]) cycle.push_back(a);
        cycle.push_back(u);
        report.chordless_cycle = cycle;
        return report;
      }
    }
  }
  throw InternalError("is_chordal: non-chordal graph without a chordless cycle");
}

namespace {

struct CliqueEnumerator {
  const Graph& g;
  std::int64_t cap;
  std::vector<VertexSet> out;

  void run(VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) {
        out.push_back(r);
        if (static_cast<std::int64_t>(out.size()) > cap) {
          throw GuardRefusal("maximal_cliques: more than " + std::to_string(cap) + " cliques");
        }
      }
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    for (Vertex u : p | x) {
      int c = (p & g.neighbors(u)).size();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Vertex v : p - g.neighbors(pivot)) {
      VertexSet nv = g.neighbors(v);
      run(r | VertexSet::singleton(v), p & nv, x & nv);
      p.erase(v);
      x.insert(v);
    }
  }
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, const Limits& limits) {
  CliqueEnumerator e{g, limits.clique_cap, {}};
  if (g.order() == 0) return {};
  e.run(VertexSet{}, g.vertices(), VertexSet{});
  std::sort(e.out.begin(), e.out.end(), LexLess{});
  return e.out;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) {
    throw PreconditionError("lexicographic_product: both factors must be nonempty");
  }
  const int m = h.order();
  if (g.order() * m > kMaxVertices) {
    throw GuardRefusal("lexicographic_product: product exceeds " + std::to_string(kMaxVertices) +
                       " vertices");
  }
  Graph out(g.order() * m);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < m; ++v) {
      for (Vertex w = 0; w < g.order(); ++w) {
        for (Vertex z = 0; z < m; ++z) {
          Vertex a = u * m + v;
          Vertex b = w * m + z;
          if (a >= b) continue;
          if (g.adjacent(u, w) || (u == w && h.adjacent(v, z))) out.add_edge(a, b);
        }
      }
    }
  }
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_connected_set(g, g.vertices() - VertexSet::singleton(v))) return false;
  }
  return true;
}

}  // namespace sbn
