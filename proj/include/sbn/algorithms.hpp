#pragma once

#include <optional>
#include <vector>

#include "sbn/graph.hpp"
#include "sbn/limits.hpp"

namespace sbn {

/// Connected components, each as a vertex set, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of G[within], ordered by smallest vertex.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

/// Number of components of G - S.
int connectivity_degree(const Graph& g, VertexSet s);

/// One induced subgraph G[V(C) + S] per component C of G - S. Empty when S = V(G).
std::vector<Subgraph> augmented_components(const Graph& g, VertexSet s);

/// True iff G[S] is connected. The empty set counts as connected.
bool is_connected_set(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);

/// Every connected nonempty vertex set of g, in increasing bitmask order.
std::vector<VertexSet> connected_sets(const Graph& g, const Limits& limits = {});

/// S separates x from y (x, y not in S, different components of G - S).
bool separates(const Graph& g, VertexSet s, Vertex x, Vertex y);
/// S is a minimal (x, y)-separator.
bool is_minimal_separator_for(const Graph& g, VertexSet s, Vertex x, Vertex y);
/// Components C of G - S with N(C) = S.
std::vector<VertexSet> full_components(const Graph& g, VertexSet s);

/// All minimal separators, sorted lexicographically. The empty set is one
/// exactly when g is disconnected.
std::vector<VertexSet> minimal_separators(const Graph& g, const Limits& limits = {});

struct DisjointPaths {
  /// Each path lists its vertices from its X end to its Y end.
  std::vector<std::vector<Vertex>> paths;
  /// A minimum (X, Y)-separator; its size equals paths.size().
  VertexSet separator;
};

/// Maximum family of pairwise vertex-disjoint X-Y paths, together with a dual
/// minimum (X,Y)-separator. A vertex in X and Y is a path of length zero.
DisjointPaths disjoint_paths(const Graph& g, VertexSet x, VertexSet y);

/// Maximum number of internally vertex-disjoint x-y paths (x, y distinct).
/// An edge xy counts as one path.
int local_connectivity(const Graph& g, Vertex x, Vertex y);

struct ChordalityReport {
  bool chordal = false;
  /// Perfect elimination ordering (chordal case).
  std::vector<Vertex> elimination_order;
  /// Maximal cliques, sorted lexicographically (chordal case).
  std::vector<VertexSet> maximal_cliques;
  /// Chordless cycle of length >= 4 in cyclic order (non-chordal case).
  std::vector<Vertex> chordless_cycle;
};

ChordalityReport is_chordal(const Graph& g);

/// Bron-Kerbosch with Tomita pivoting; sorted lexicographically. Refuses
/// with GuardRefusal once more than limits.clique_cap cliques are found.
std::vector<VertexSet> maximal_cliques(const Graph& g, const Limits& limits = {});

/// Vertex (u, v) of the result is u * |V(H)| + v.
Graph lexicographic_product(const Graph& g, const Graph& h);

/// True iff g is connected, has at least 3 vertices and no cut vertex.
bool is_biconnected(const Graph& g);

}  // namespace sbn
