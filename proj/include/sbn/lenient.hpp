#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbn/bramble.hpp"
#include "sbn/graph.hpp"
#include "sbn/limits.hpp"
#include "sbn/minor.hpp"

namespace sbn {

/// A tree with one bag per node. The decomposed graph is passed alongside.
/// Width is the largest bag size (for classic decompositions the treewidth
/// convention subtracts one; see classic_width).
struct Decomposition {
  Graph tree;
  std::vector<VertexSet> bags;

  int width() const;
  int node_count() const { return tree.order(); }
};

enum class DecompositionKind { kLenient, kClassic };

const char* to_string(DecompositionKind kind);

struct DecompositionVerdict {
  bool valid = true;
  /// "tree", "C1", "C2" or "C3" for the first violated condition.
  std::string condition;
  std::string reason;
};

/// Lenient conditions: bags cover V(G); every edge lies in the union of two
/// close bags (equal or adjacent nodes); every trace is connected in the tree.
/// Throws StructuralError on a bag count differing from the tree order or on
/// bag vertices outside the graph.
DecompositionVerdict validate_ltd(const Graph& g, const Decomposition& d);

/// Classic conditions: as above with every edge inside a single bag.
DecompositionVerdict validate_classic(const Graph& g, const Decomposition& d);

DecompositionVerdict validate(const Graph& g, const Decomposition& d, DecompositionKind kind);

inline int ltd_width(const Decomposition& d) { return d.width(); }
/// Largest bag size minus one.
inline int classic_width(const Decomposition& d) { return d.width() - 1; }

/// Tree nodes whose bag contains v.
VertexSet trace(const Decomposition& d, Vertex v);

/// Private vertices of a leaf. DomainError unless `leaf` has degree one in a
/// tree of at least two nodes.
VertexSet petal(const Decomposition& d, int leaf);

struct ExtremeVerdict {
  bool extreme = true;
  /// "equal-size", "subset", "degree-2" or "leaf-siblings".
  std::string clause;
  std::string reason;
};

/// Checks the four extremeness clauses literally. The decomposition must be
/// valid.
ExtremeVerdict is_extreme(const Graph& g, const Decomposition& d);

/// Rewrites a valid decomposition to an extreme one of the same width by
/// applying pad-small-bags, delete-subset-bags, delete-redundant-degree-2 and
/// merge-leaf-siblings, always the first applicable in that order, until no
/// rewrite applies. Throws PreconditionError on an invalid input.
Decomposition extremize(const Graph& g, const Decomposition& d);

/// Adds all pairs inside each union of close bags.
Graph completion(const Graph& g, const Decomposition& d);

/// Restriction of d to the augmented component `c` (from
/// augmented_components(g, s)) with respect to node `root`. Bags are given
/// in the local labels of c.graph. The path from `root` to Trace(x) is the
/// shortest one, ending at the trace node nearest to `root`.
Decomposition amalgamated_restriction(const Graph& g, const Decomposition& d, VertexSet s,
                                      const Subgraph& c, int root);

struct AmalgamationPart {
  Subgraph component;
  /// Decomposition of component.graph (local labels).
  Decomposition decomposition;
  /// Node whose bag contains S.
  int anchor = 0;
};

/// Joins the parts through a new node with bag S, appended as the last node.
/// S must be nonempty and the parts must be exactly the augmented components
/// of g - S (StructuralError otherwise).
Decomposition s_amalgamation(const Graph& g, const std::vector<AmalgamationPart>& parts, VertexSet s);

/// A lenient decomposition of width at most k, or nothing when none exists.
/// Exact: memoized search over connected vertex sets C with |N(C)| <= k,
/// each solved by a bag B inside C + N(C) meeting C, whose leftover
/// components are solved recursively. Refuses above limits.lenient_search.
std::optional<Decomposition> decide_width_le_k(const Graph& g, int k, const Limits& limits = {});

/// Smallest k accepted by decide_width_le_k, with its decomposition.
std::pair<int, Decomposition> min_lenient_width(const Graph& g, const Limits& limits = {});

struct SbnResult {
  int value = 0;
  StrictBramble lower;
  Decomposition upper;
};

/// Strict bramble number with a bramble and a decomposition certifying it.
SbnResult sbn_exact(const Graph& g, const Limits& limits = {});

struct LtpWitness {
  Graph tree;
  int k = 0;
  MinorModel model;
};

/// Minor model of g in tree * K_k from an extreme decomposition of width k:
/// vertex v takes, for every node t of its trace, the copy of t indexed by
/// the rank of v in the bag of t. PreconditionError on non-extreme input.
LtpWitness ltp_witness(const Graph& g, const Decomposition& d);

/// Single node holding every vertex.
Decomposition trivial_decomposition(const Graph& g);

}  // namespace sbn
