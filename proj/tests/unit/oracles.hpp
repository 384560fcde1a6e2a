#pragma once

// Brute-force reference implementations. They work on a plain adjacency
// matrix and bitmasks and share no code with the library beyond reading
// adjacency out of a Graph.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sbn/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const sbn::Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m[u][v] = u != v && g.adjacent(u, v);
  }
  return m;
}

inline int order(const Matrix& m) { return static_cast<int>(m.size()); }
inline Mask all(const Matrix& m) { return order(m) == 64 ? ~Mask{0} : (Mask{1} << order(m)) - 1; }
inline bool in(Mask s, int v) { return (s >> v) & 1U; }

// Vertices of `within` reachable from `start` inside `within`.
inline Mask reach(const Matrix& m, Mask within, int start) {
  Mask seen = Mask{1} << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < order(m); ++v) {
      if (m[u][v] && in(within, v) && !in(seen, v)) {
        seen |= Mask{1} << v;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

inline std::vector<Mask> components(const Matrix& m, Mask within) {
  std::vector<Mask> out;
  Mask left = within;
  for (int v = 0; v < order(m); ++v) {
    if (!in(left, v)) continue;
    Mask c = reach(m, within, v);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline bool connected(const Matrix& m, Mask s) {
  if (s == 0) return true;
  return reach(m, s, std::countr_zero(s)) == s;
}

inline Mask neighbourhood(const Matrix& m, Mask s) {
  Mask out = 0;
  for (int u = 0; u < order(m); ++u) {
    if (!in(s, u)) continue;
    for (int v = 0; v < order(m); ++v) {
      if (m[u][v]) out |= Mask{1} << v;
    }
  }
  return out & ~s;
}

// graph6 read bit by bit from the public description (n < 63 only).
inline std::pair<int, std::vector<std::pair<int, int>>> decode_graph6(const std::string& text) {
  int n = text.at(0) - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < text.size(); ++i) {
    int x = text[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits.at(k++)) edges.emplace_back(i, j);
    }
  }
  return {n, edges};
}

// S is a minimal separator iff G - S has at least two full components.
inline std::vector<Mask> minimal_separators(const Matrix& m) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= all(m); ++s) {
    int full = 0;
    for (Mask c : components(m, all(m) & ~s)) {
      if (neighbourhood(m, c) == s) ++full;
    }
    if (full >= 2) out.push_back(s);
    if (s == all(m)) break;
  }
  return out;
}

// Smallest S such that no path of G - S joins X - S to Y - S.
inline int min_xy_separator(const Matrix& m, Mask x, Mask y) {
  int best = order(m);
  for (Mask s = 0; s <= all(m); ++s) {
    int size = std::popcount(s);
    if (size < best) {
      bool separated = true;
      Mask rest = all(m) & ~s;
      for (Mask c : components(m, rest)) {
        if ((c & x) && (c & y)) separated = false;
      }
      if (separated) best = size;
    }
    if (s == all(m)) break;
  }
  return best;
}

// Smallest S avoiding x and y that separates them (x, y non-adjacent).
inline int min_vertex_cut(const Matrix& m, int x, int y) {
  int best = order(m);
  Mask ends = (Mask{1} << x) | (Mask{1} << y);
  for (Mask s = 0; s <= all(m); ++s) {
    if (!(s & ends) && std::popcount(s) < best && !in(reach(m, all(m) & ~s, x), y)) best = std::popcount(s);
    if (s == all(m)) break;
  }
  return best;
}

// Pattern is a minor iff some assignment of host vertices to pattern
// vertices (or to nothing) gives nonempty connected, adjacent branch sets.
inline bool is_minor(const Matrix& host, const Matrix& pattern) {
  const int n = order(host);
  const int p = order(pattern);
  if (p == 0) return true;
  if (p > n) return false;
  std::vector<int> label(n, 0);
  while (true) {
    std::vector<Mask> branch(p, 0);
    for (int v = 0; v < n; ++v) {
      if (label[v] > 0) branch[label[v] - 1] |= Mask{1} << v;
    }
    bool ok = true;
    for (int u = 0; u < p && ok; ++u) ok = branch[u] != 0 && connected(host, branch[u]);
    for (int u = 0; u < p && ok; ++u) {
      for (int w = u + 1; w < p && ok; ++w) {
        if (pattern[u][w]) ok = (neighbourhood(host, branch[u]) & branch[w]) != 0;
      }
    }
    if (ok) return true;
    int i = 0;
    while (i < n && label[i] == p) label[i++] = 0;
    if (i == n) return false;
    ++label[i];
  }
}

// Chordal iff no vertex subset of size >= 4 induces a cycle.
inline bool chordal(const Matrix& m) {
  for (Mask s = 0; s <= all(m); ++s) {
    if (std::popcount(s) >= 4 && connected(m, s)) {
      bool cycle = true;
      for (int v = 0; v < order(m) && cycle; ++v) {
        if (!in(s, v)) continue;
        int d = 0;
        for (int w = 0; w < order(m); ++w) d += in(s, w) && m[v][w];
        cycle = d == 2;
      }
      if (cycle) return false;
    }
    if (s == all(m)) break;
  }
  return true;
}

inline bool clique(const Matrix& m, Mask s) {
  for (int u = 0; u < order(m); ++u) {
    for (int v = u + 1; v < order(m); ++v) {
      if (in(s, u) && in(s, v) && !m[u][v]) return false;
    }
  }
  return true;
}

inline std::vector<Mask> maximal_cliques(const Matrix& m) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= all(m); ++s) {
    if (!clique(m, s)) continue;
    bool maximal = true;
    for (int v = 0; v < order(m) && maximal; ++v) {
      if (!in(s, v) && clique(m, s | (Mask{1} << v))) maximal = false;
    }
    if (maximal) out.push_back(s);
    if (s == all(m)) break;
  }
  return out;
}

inline int min_hitting_set(const std::vector<Mask>& sets, int n) {
  int best = n + 1;
  for (Mask c = 0; c < (Mask{1} << n); ++c) {
    if (std::popcount(c) >= best) continue;
    if (std::all_of(sets.begin(), sets.end(), [&](Mask s) { return (s & c) != 0; })) best = std::popcount(c);
  }
  return sets.empty() ? 0 : best;
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
  if (order(a) != order(b)) return false;
  std::vector<int> perm(order(a));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < order(a) && same; ++u) {
      for (int v = 0; v < order(a) && same; ++v) same = a[u][v] == b[perm[u]][perm[v]];
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Treewidth as the best elimination ordering over all permutations.
inline int treewidth(const Matrix& m) {
  const int n = order(m);
  if (n == 0) return -1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    Matrix f = m;
    int width = 0;
    Mask gone = 0;
    for (int v : perm) {
      std::vector<int> nb;
      for (int w = 0; w < n; ++w) {
        if (f[v][w] && !in(gone, w)) nb.push_back(w);
      }
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb) {
        for (int b : nb) {
          if (a != b) f[a][b] = true;
        }
      }
      gone |= Mask{1} << v;
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Maximum bramble order: every maximal family of pairwise intersecting
// (strict) or touching connected sets, each with a brute-force hitting set.
// Small graphs only (at most 5 vertices).
inline int bramble_number(const Matrix& m, bool strict) {
  const int n = order(m);
  std::vector<Mask> sets;
  for (Mask s = 1; s <= all(m); ++s) {
    if (connected(m, s)) sets.push_back(s);
    if (s == all(m)) break;
  }
  auto ok = [&](Mask a, Mask b) {
    return (a & b) != 0 || (!strict && (neighbourhood(m, a) & b) != 0);
  };
  int best = 0;
  std::vector<Mask> family;
  // Bron-Kerbosch over the compatibility graph, pivoting on the vertex
  // with the most compatible candidates.
  auto extend = [&](auto&& self, std::vector<int> cand, std::vector<int> excl) -> void {
    if (cand.empty() && excl.empty()) {
      best = std::max(best, min_hitting_set(family, n));
      return;
    }
    int pivot = -1;
    int most = -1;
    for (const auto* pool : {&cand, &excl}) {
      for (int u : *pool) {
        int c = 0;
        for (int j : cand) c += j != u && ok(sets[u], sets[j]);
        if (c > most) {
          most = c;
          pivot = u;
        }
      }
    }
    std::vector<int> todo;
    for (int j : cand) {
      if (j == pivot || !ok(sets[pivot], sets[j])) todo.push_back(j);
    }
    for (int i : todo) {
      cand.erase(std::find(cand.begin(), cand.end(), i));
      std::vector<int> c2;
      std::vector<int> x2;
      for (int j : cand) {
        if (ok(sets[i], sets[j])) c2.push_back(j);
      }
      for (int j : excl) {
        if (ok(sets[i], sets[j])) x2.push_back(j);
      }
      family.push_back(sets[i]);
      self(self, c2, x2);
      family.pop_back();
      excl.push_back(i);
    }
  };
  std::vector<int> cand;
  std::vector<int> excl;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (ok(sets[i], sets[i])) cand.push_back(static_cast<int>(i));
  }
  extend(extend, cand, excl);
  return best;
}

}  // namespace oracle
