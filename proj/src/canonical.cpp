#include "sbn/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sbn/algorithms.hpp"
#include "sbn/errors.hpp"

namespace sbn {

namespace {

using Colouring = std::vector<int>;

// Equitable refinement. Colours of the result are ranks of invariant
// signatures, so the output depends only on the graph and the input colouring.
Colouring refine(const Graph& g, Colouring colour) {
  const int n = g.order();
  for (;;) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    Colouring next(n);
    for (auto& [s, v] : sig) {
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin());
    }
    std::set<int> before(colour.begin(), colour.end());
    std::set<int> after(next.begin(), next.end());
    if (after.size() == before.size()) return next;
    colour = std::move(next);
  }
}

struct Search {
  const Graph& g;
  std::string best;
  std::vector<Vertex> best_perm;

  void leaf(const Colouring& colour) {
    std::vector<Vertex> perm(colour.begin(), colour.end());
    Graph h = relabel(g, perm);
    std::string code = to_graph6(h);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_perm = std::move(perm);
    }
  }

  void run(const Colouring& colour) {
    const int n = g.order();
    std::vector<int> cell_size(n, 0);
    for (int c : colour) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    }
    if (target < 0) {
      leaf(colour);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      // Swapping twins is an automorphism preserving the colouring.
      bool twin = false;
      for (Vertex u : tried) {
        VertexSet a = g.neighbors(u) - VertexSet{v};
        VertexSet b = g.neighbors(v) - VertexSet{u};
        twin = twin || a == b;
      }
      if (twin) continue;
      tried.push_back(v);
      Colouring split(n);
      for (Vertex u = 0; u < n; ++u) {
        split[u] = 2 * colour[u] + ((colour[u] == target && u != v) ? 1 : 0);
      }
      run(refine(g, split));
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g, const Limits& limits) {
  enforce_guard("canonical_code", g.order(), limits.canonical);
  if (g.order() == 0) return g;
  Search s{g, {}, {}};
  s.run(refine(g, Colouring(g.order(), 0)));
  return relabel(g, s.best_perm);
}

std::string canonical_code(const Graph& g, const Limits& limits) {
  return to_graph6(canonical_form(g, limits));
}

std::vector<Graph> all_graphs(int n, const Limits& limits) {
  if (n < 0) throw DomainError("all_graphs: negative order");
  enforce_guard("all_graphs", n, limits.oracle);
  std::vector<Graph> out;
  std::set<std::string> level{canonical_code(Graph(n), limits)};
  while (!level.empty()) {
    std::set<std::string> next;
    for (const auto& code : level) {
      Graph g = parse_graph6(code);
      out.push_back(g);
      for (auto [u, v] : g.non_edges()) {
        Graph h = g;
        h.add_edge(u, v);
        next.insert(canonical_code(h, limits));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Graph> connected_graphs(int n, const Limits& limits) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n, limits)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace sbn
