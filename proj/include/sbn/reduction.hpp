#pragma once

#include <vector>

#include "sbn/graph.hpp"
#include "sbn/lenient.hpp"
#include "sbn/limits.hpp"

namespace sbn {

struct Provenance {
  bool original = true;
  /// The source vertex (original) or the source edge (subdivision point).
  Vertex vertex = -1;
  Edge edge{-1, -1};
  /// Copy index in [1, 2k-1] for subdivision points, 0 otherwise.
  int copy = 0;
};

struct GadgetMap {
  Graph source;
  int k = 0;
  Graph output;
  std::vector<Provenance> provenance;
};

/// Every edge of G replaced by 2k-1 internally disjoint paths of length two.
/// Original vertices keep their indices; subdivision points follow, grouped
/// by source edge in sorted order.
GadgetMap gadget(const Graph& g, int k);

struct TreewidthResult {
  int value = -1;
  Decomposition witness;
};

/// Exact treewidth by subset dynamic programming over elimination orderings.
/// The empty graph has treewidth -1. Refuses above limits.treewidth.
TreewidthResult treewidth_exact(const Graph& g, const Limits& limits = {});

/// Every pair of source-adjacent original vertices shares a bag of d.
/// PreconditionError unless d is a valid lenient decomposition of the gadget
/// of width at most its k.
bool adjacency_bag_lemma_check(const GadgetMap& h, const Decomposition& d);

/// Width-k lenient decomposition of gadget(G, k) built from a classic
/// decomposition of G of width at most k-1: the classic bags, plus leaves of
/// subdivision points hung off a bag holding both ends of their edge.
Decomposition forward_gadget_decomposition(const GadgetMap& h, const Decomposition& classic);

struct ReductionSides {
  bool treewidth_side = false;  // tw(G) <= k - 1
  bool sbn_side = false;        // gadget(G, k) has a lenient decomposition of width <= k
};

/// Both sides of the equivalence. Requires k >= 2 (PreconditionError otherwise).
ReductionSides reduction_sides(const Graph& g, int k, const Limits& limits = {});

/// True iff both sides agree; a false result means a bug.
bool verify_reduction(const Graph& g, int k, const Limits& limits = {});

}  // namespace sbn
