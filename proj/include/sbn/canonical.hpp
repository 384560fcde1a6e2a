#pragma once

#include <string>
#include <vector>

#include "sbn/graph.hpp"
#include "sbn/limits.hpp"

namespace sbn {

/// Isomorphism-invariant code: equal codes iff isomorphic. Colour refinement
/// followed by individualization backtracking; the code is the least
/// adjacency string over all discrete leaves. Refuses above limits.canonical.
std::string canonical_code(const Graph& g, const Limits& limits = {});

/// The relabelling of g whose adjacency string is canonical_code(g).
Graph canonical_form(const Graph& g, const Limits& limits = {});

/// One representative per isomorphism class of graphs on exactly n vertices,
/// generated by single-edge augmentation with canonical deduplication.
/// Representatives are in canonical form, sorted by (edge count, code).
std::vector<Graph> all_graphs(int n, const Limits& limits = {});

/// Connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n, const Limits& limits = {});

}  // namespace sbn
