#pragma once

#include <optional>
#include <vector>

#include "sbn/graph.hpp"
#include "sbn/limits.hpp"

namespace sbn {

struct MinorModel {
  Graph pattern;
  Graph host;
  /// branch_sets[u] is the host vertex set realizing pattern vertex u.
  std::vector<VertexSet> branch_sets;
};

/// True iff every branch set is nonempty and connected in the host, the sets
/// are pairwise disjoint, and every pattern edge is realized by a host edge.
bool verify_minor_model(const MinorModel& m);

/// Exhaustive branch search for a model of `pattern` in `host`. Pattern
/// vertices are placed in descending degree order; failed partial states are
/// memoized. Refuses patterns above limits.minor_pattern and hosts above
/// limits.exponential.
std::optional<MinorModel> find_minor(const Graph& host, const Graph& pattern,
                                     const Limits& limits = {});

inline bool is_minor(const Graph& host, const Graph& pattern, const Limits& limits = {}) {
  return find_minor(host, pattern, limits).has_value();
}

}  // namespace sbn
