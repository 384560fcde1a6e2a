#include "sbn/domino.hpp"

#include <algorithm>

#include "sbn/algorithms.hpp"
#include "sbn/errors.hpp"

namespace sbn {

const std::array<const char*, 8>& domino_property_ids() {
  static const std::array<const char*, 8> ids{"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
  return ids;
}

namespace {

PropertyCheck violation(std::string description, std::vector<VertexSet> witness) {
  return {false, std::move(description), std::move(witness)};
}

std::vector<VertexSet> separators_inside(const std::vector<VertexSet>& seps, VertexSet clique) {
  std::vector<VertexSet> out;
  for (VertexSet s : seps) {
    if (s.subset_of(clique)) out.push_back(s);
  }
  return out;
}

}  // namespace

DominoReport recognize_domino(const Graph& g, int k, const Limits& limits) {
  DominoReport report;
  report.k = k;
  for (const char* id : domino_property_ids()) report.properties[id] = PropertyCheck{};
  if (g.is_complete() && g.order() <= k) {
    report.base_case = true;
    report.verdict = true;
    return report;
  }
  auto& p = report.properties;

  auto chordal = is_chordal(g);
  if (!chordal.chordal) {
    p["i"] = violation("chordless cycle", {VertexSet::of(chordal.chordless_cycle)});
  }
  const auto seps = minimal_separators(g, limits);
  const auto cliques = chordal.chordal ? chordal.maximal_cliques : maximal_cliques(g, limits);

  for (VertexSet s : seps) {
    if (s.size() != k) {
      p["ii"] = violation("minimal separator of size " + std::to_string(s.size()), {s});
      break;
    }
  }
  for (VertexSet c : cliques) {
    if (c.size() < k + 1 || c.size() > 2 * k) {
      p["iii"] = violation("maximal clique of size " + std::to_string(c.size()), {c});
      break;
    }
  }
  for (VertexSet c : cliques) {
    auto inside = separators_inside(seps, c);
    if (inside.size() > 2) {
      inside.insert(inside.begin(), c);
      p["iv"] = violation("maximal clique containing " + std::to_string(inside.size() - 1) +
                              " minimal separators",
                          inside);
      break;
    }
  }
  for (VertexSet c : cliques) {
    auto inside = separators_inside(seps, c);
    if (inside.size() == 2 && (inside[0] | inside[1]) != c) {
      p["v"] = violation("maximal clique exceeds the union of its two separators", {c, inside[0], inside[1]});
      break;
    }
  }

  // External cliques hold at most one separator; K_G(S) collects those
  // holding S.
  auto family = [&](VertexSet s) {
    std::vector<VertexSet> out;
    for (VertexSet c : cliques) {
      if (s.subset_of(c) && separators_inside(seps, c).size() <= 1) out.push_back(c);
    }
    return out;
  };

  for (VertexSet s : seps) {
    if (!family(s).empty() || connectivity_degree(g, s) != 2) continue;
    bool bad = false;
    for (std::size_t i = 0; i < seps.size() && !bad; ++i) {
      for (std::size_t j = i + 1; j < seps.size() && !bad; ++j) {
        if (seps[i] == s || seps[j] == s) continue;
        if (s.subset_of(seps[i] | seps[j])) {
          p["vi"] = violation("internal separator of connectivity-degree two inside two others",
                              {s, seps[i], seps[j]});
          bad = true;
        }
      }
    }
    if (bad) break;
  }
  for (VertexSet s : seps) {
    if (family(s).empty() || connectivity_degree(g, s) != 2) continue;
    VertexSet all;
    std::vector<VertexSet> holding{s};
    for (VertexSet c : cliques) {
      if (s.subset_of(c)) {
        all |= c;
        holding.push_back(c);
      }
    }
    if (all.size() <= 2 * k) {
      p["vii"] = violation("external separator of connectivity-degree two spans only " +
                               std::to_string(all.size()) + " vertices",
                           holding);
      break;
    }
  }
  for (VertexSet s : seps) {
    auto ext = family(s);
    bool bad = false;
    for (std::size_t i = 0; i < ext.size() && !bad; ++i) {
      for (std::size_t j = i + 1; j < ext.size() && !bad; ++j) {
        int val = (ext[i] - s).size() + (ext[j] - s).size();
        if (val <= k) {
          p["viii"] = violation("two external cliques of total valiancy " + std::to_string(val), {s, ext[i], ext[j]});
          bad = true;
        }
      }
    }
    if (bad) break;
  }

  report.verdict = std::all_of(p.begin(), p.end(), [](const auto& kv) { return kv.second.pass; });
  return report;
}

std::array<bool, 4> refinement_properties(const Graph& g, VertexSet s, VertexSet c, VertexSet s_prime,
                                          const Limits& limits) {
  std::array<bool, 4> out{};
  VertexSet augmented = c | s;
  out[0] = s_prime.subset_of(augmented) && s_prime != augmented;
  out[1] = !s.subset_of(s_prime) && !s_prime.subset_of(s);
  VertexSet joint = s | s_prime;
  auto cliques = maximal_cliques(g, limits);
  out[2] = std::find(cliques.begin(), cliques.end(), joint) != cliques.end();
  auto comps = components_within(g, g.vertices() - s_prime);
  VertexSet rest = c - s_prime;
  out[3] = !rest.empty() && std::find(comps.begin(), comps.end(), rest) != comps.end();
  return out;
}

Refinement refine_separator(const Graph& g, int k, VertexSet s, VertexSet c, const Limits& limits) {
  if (!recognize_domino(g, k, limits).verdict) {
    throw PreconditionError("refine_separator: graph is not a " + std::to_string(k) + "-domino-tree");
  }
  const auto seps = minimal_separators(g, limits);
  if (std::find(seps.begin(), seps.end(), s) == seps.end()) {
    throw PreconditionError("refine_separator: S is not a minimal separator");
  }
  auto comps = components_within(g, g.vertices() - s);
  if (std::find(comps.begin(), comps.end(), c) == comps.end()) {
    throw PreconditionError("refine_separator: C is not a component of G - S");
  }
  if (c.size() <= k) throw PreconditionError("refine_separator: C must have more than k vertices");

  Vertex x = -1;
  Vertex y = -1;
  for (Vertex a : s) {
    for (Vertex b : c) {
      if (x < 0 && !g.adjacent(a, b)) {
        x = a;
        y = b;
      }
    }
  }
  if (x < 0) throw InternalError("refine_separator: S is complete to C");

  VertexSet best;
  int best_size = -1;
  for (VertexSet candidate : seps) {
    if (!is_minimal_separator_for(g, candidate, x, y)) continue;
    int size = candidate.size();
    for (VertexSet comp : components_within(g, g.vertices() - candidate)) {
      if (comp.contains(y)) size += comp.size();
    }
    if (size > best_size) {
      best_size = size;
      best = candidate;
    }
  }
  if (best_size < 0) throw InternalError("refine_separator: no minimal (x,y)-separator");
  return {best, refinement_properties(g, s, c, best, limits)};
}

Decomposition widen(const Graph& g, const Decomposition& d, int k) {
  const int target = std::min(k, g.order());
  Decomposition out = d;
  for (;;) {
    int small = -1;
    for (int t = 0; t < out.tree.order() && small < 0; ++t) {
      if (out.bags[t].size() < target) small = t;
    }
    if (small < 0) return out;
    bool grown = false;
    for (int u : out.tree.neighbors(small)) {
      VertexSet extra = out.bags[u] - out.bags[small];
      if (!extra.empty()) {
        out.bags[small].insert(extra.first());
        grown = true;
        break;
      }
    }
    if (grown) continue;
    // Every neighbour lies inside this bag; absorb the first one.
    if (out.tree.order() == 1) {
      throw InternalError("widen: a single bag smaller than the graph");
    }
    int u = out.tree.neighbors(small).first();
    std::vector<Edge> edges;
    for (auto [a, b] : out.tree.edges()) {
      if (a != u && b != u) edges.emplace_back(a, b);
    }
    for (int w : out.tree.neighbors(u)) {
      if (w != small) edges.emplace_back(w, small);
    }
    std::vector<int> index(out.tree.order());
    int next = 0;
    for (int t = 0; t < out.tree.order(); ++t) index[t] = t == u ? -1 : next++;
    Decomposition shrunk{Graph(out.tree.order() - 1), {}};
    for (int t = 0; t < out.tree.order(); ++t) {
      if (t != u) shrunk.bags.push_back(out.bags[t]);
    }
    for (auto [a, b] : edges) shrunk.tree.add_edge(index[a], index[b]);
    out = std::move(shrunk);
  }
}

std::optional<DominoCompletion> domino_completion(const Graph& g, int k, const Limits& limits) {
  auto d = decide_width_le_k(g, k, limits);
  if (!d) return std::nullopt;
  if (g.order() <= k) {
    return DominoCompletion{complete_graph(g.order()), trivial_decomposition(g)};
  }
  Decomposition wide = widen(g, *d, k);
  if (!validate_ltd(g, wide).valid || wide.width() != k) {
    throw InternalError("domino_completion: widening broke the decomposition");
  }
  Decomposition extreme = extremize(g, wide);
  Graph plus = completion(g, extreme);
  for (auto [u, v] : g.edges()) {
    if (!plus.adjacent(u, v)) throw InternalError("domino_completion: completion misses an edge");
  }
  // The completion can fall short of edge-maximality (property vii fails
  // on a fan of triangles, for instance). Saturate: add the first non-edge
  // that keeps the width at most k until none is left; edge-maximal
  // graphs of the class are exactly the k-domino-trees.
  while (!recognize_domino(plus, k, limits).verdict) {
    bool added = false;
    for (auto [u, v] : plus.non_edges()) {
      Graph next = plus;
      next.add_edge(u, v);
      if (auto dn = decide_width_le_k(next, k, limits)) {
        plus = std::move(next);
        extreme = extremize(plus, widen(plus, *dn, k));
        added = true;
        break;
      }
    }
    if (!added) throw InternalError("domino_completion: edge-maximal graph is not a domino tree");
  }
  return DominoCompletion{plus, extreme};
}

Graph gen_chain(int n, int k) {
  if (k < 1 || n < k) throw DomainError("gen_chain: requires n >= k >= 1");
  if (n > kMaxVertices) throw GuardRefusal("gen_chain: more than 64 vertices");
  Graph g(n);
  auto clique = [&](int from, int to) {
    for (int u = from; u <= to; ++u) {
      for (int v = u + 1; v <= to; ++v) g.add_edge(u, v);
    }
  };
  if (n < 2 * k) {
    clique(0, n - 1);
    return g;
  }
  const int c = n / k;
  const int r = n % k;
  for (int i = 0; i + 1 < c; ++i) clique(i * k, i * k + 2 * k - 1);
  if (r > 0) clique((c - 1) * k, n - 1);
  return g;
}

Graph gen_fan(int n, int k) {
  if (k < 1 || n < 3 * k) throw DomainError("gen_fan: requires n >= 3k and k >= 1");
  if (n > kMaxVertices) throw GuardRefusal("gen_fan: more than 64 vertices");
  Graph g(n);
  auto clique = [&](const std::vector<Vertex>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) g.add_edge(members[i], members[j]);
    }
  };
  std::vector<Vertex> common;
  for (Vertex v = 0; v < k - 1; ++v) common.push_back(v);
  const int m = n - 3 * k + 1;
  std::vector<Vertex> x;
  for (int i = 0; i < m; ++i) x.push_back(2 * k - 1 + i);
  std::vector<Vertex> first = common;
  for (Vertex v = k - 1; v < 2 * k - 1; ++v) first.push_back(v);
  first.push_back(x.front());
  clique(first);
  for (int i = 0; i + 1 < m; ++i) {
    auto mid = common;
    mid.push_back(x[i]);
    mid.push_back(x[i + 1]);
    clique(mid);
  }
  std::vector<Vertex> last = common;
  last.push_back(x.back());
  for (Vertex v = n - k; v < n; ++v) last.push_back(v);
  clique(last);
  return g;
}

long long max_edge_bound(int n, int k) {
  if (k < 1 || n < k) throw DomainError("max_edge_bound: requires n >= k >= 1");
  const long long nn = n;
  const long long kk = k;
  const long long r = n % k;
  return ((3 * kk - 1) * nn - 2 * kk * kk - kk * r + r * r) / 2;
}

long long fan_edge_count(int n, int k) {
  if (k < 1 || n < 3 * k) throw DomainError("fan_edge_count: requires n >= 3k and k >= 1");
  const long long kk = k;
  return kk * n + (kk * kk - 3 * kk) / 2;
}

bool is_edge_maximal(const Graph& g, int k, const Limits& limits) {
  if (!decide_width_le_k(g, k, limits)) {
    throw PreconditionError("is_edge_maximal: sbn(G) exceeds k");
  }
  for (auto [u, v] : g.non_edges()) {
    Graph h = g;
    h.add_edge(u, v);
    if (decide_width_le_k(h, k, limits)) return false;
  }
  return true;
}

}  // namespace sbn
