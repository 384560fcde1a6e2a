#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbn/graph.hpp"
#include "sbn/lenient.hpp"
#include "sbn/limits.hpp"

namespace sbn {

struct PropertyCheck {
  bool pass = true;
  /// Human-readable reason for a failure.
  std::string description;
  /// The violating separator, clique or family.
  std::vector<VertexSet> witness;
};

struct DominoReport {
  int k = 0;
  bool verdict = false;
  /// G is K_r for some r <= k, accepted without further checks.
  bool base_case = false;
  /// Keys "i" .. "viii".
  std::map<std::string, PropertyCheck> properties;
};

/// The eight defining properties evaluated literally on the lists of minimal
/// separators and maximal cliques.
DominoReport recognize_domino(const Graph& g, int k, const Limits& limits = {});

/// Property ids in definition order.
const std::array<const char*, 8>& domino_property_ids();

struct Refinement {
  VertexSet separator;
  /// The four lemma properties: inside C + S properly; incomparable with S;
  /// S + S' is a maximal clique; C - S' is a component of G - S'.
  std::array<bool, 4> properties{};
  bool all() const { return properties[0] && properties[1] && properties[2] && properties[3]; }
};

/// Lemma construction: x in S and y in C non-adjacent (least such pair), S'
/// the minimal (x, y)-separator whose augmented component around y is
/// largest (ties: lexicographically least). PreconditionError unless G is a
/// k-domino-tree, S a minimal separator and C a component of G - S with more
/// than k vertices.
Refinement refine_separator(const Graph& g, int k, VertexSet s, VertexSet c,
                            const Limits& limits = {});

/// Checks the four lemma properties for a candidate S'.
std::array<bool, 4> refinement_properties(const Graph& g, VertexSet s, VertexSet c, VertexSet s_prime,
                                          const Limits& limits = {});

struct DominoCompletion {
  Graph domino;
  /// Extreme width-k decomposition of `domino`; its completion is `domino`.
  Decomposition decomposition;
};

/// A k-domino-tree spanning G, or nothing when G has no lenient
/// decomposition of width k. Starts from the completion of an extreme
/// width-k decomposition and, when that is not yet a domino tree, keeps
/// adding the first non-edge that preserves width k.
std::optional<DominoCompletion> domino_completion(const Graph& g, int k, const Limits& limits = {});

/// Raises every bag of a valid decomposition to size min(k, |V(G)|) by
/// pulling vertices from neighbouring bags, dropping contained neighbours
/// when nothing can be pulled.
Decomposition widen(const Graph& g, const Decomposition& d, int k);

/// Linear chain of 2k-cliques overlapping in k vertices; the last clique has
/// k + (n mod k) vertices. n >= k >= 1.
Graph gen_chain(int n, int k);
/// Fan: every maximal clique contains the common set {0..k-2}; the two end
/// cliques have 2k vertices, the middle ones k+1. n >= 3k, k >= 1.
Graph gen_fan(int n, int k);

/// ((3k-1)n - 2k^2 - k r + r^2) / 2 with r = n mod k.
long long max_edge_bound(int n, int k);
/// k n + (k^2 - 3k) / 2.
long long fan_edge_count(int n, int k);

/// True iff adding any non-edge raises sbn above k. PreconditionError unless
/// sbn(G) <= k.
bool is_edge_maximal(const Graph& g, int k, const Limits& limits = {});

}  // namespace sbn
