#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbn/vertex_set.hpp"

namespace sbn {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range [0, order).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  /// Throws StructuralError on self-loops, duplicates or out-of-range endpoints.
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  /// Open neighbourhood N(S) = (union of N(v), v in S) minus S.
  VertexSet neighbors(VertexSet s) const;
  int degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int edge_count() const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  /// Unordered pairs of distinct non-adjacent vertices, sorted.
  std::vector<Edge> non_edges() const;

  /// Returns false (and changes nothing) if the edge already exists.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  bool is_complete() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;
  std::vector<VertexSet> adj_;
};

/// An induced subgraph together with its vertex correspondence to the host.
struct Subgraph {
  Graph graph;
  /// original[i] is the host vertex of subgraph vertex i (increasing).
  std::vector<Vertex> original;
  /// The host vertex set.
  VertexSet members;

  VertexSet to_host(VertexSet local) const;
  VertexSet to_local(VertexSet host) const;
};

Subgraph induced_subgraph(const Graph& g, VertexSet s);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Hub 0 joined to the cycle 1..n.
Graph wheel_graph(int rim);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Edge {u, v} of g becomes {perm[u], perm[v]}; perm must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Edge e);
/// Contracts e = {u, v} into u; vertices above v shift down by one.
Graph contract_edge(const Graph& g, Edge e);

enum class MinorOp { kDeleteVertex, kDeleteEdge, kContractEdge };

struct OneStepMinor {
  MinorOp op;
  /// Vertex (first component only) or edge acted on.
  Edge target;
  Graph minor;
  std::string describe() const;
};

/// All vertex deletions, edge deletions and edge contractions, in that order.
std::vector<OneStepMinor> one_step_minors(const Graph& g);

// --- text formats ---------------------------------------------------------

enum class GraphFormat { kEdgeList, kGraph6 };

/// Throws ParseError naming the line (edge-list) or byte offset (graph6).
Graph parse_graph(std::string_view text, GraphFormat format);
Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view text);

std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);

/// Guesses the format: a single whitespace-free token is graph6.
GraphFormat detect_format(std::string_view text);

}  // namespace sbn
