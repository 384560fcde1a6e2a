#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbn/graph.hpp"
#include "sbn/limits.hpp"

namespace sbn {

enum class BrambleMode { kStrict, kTouching };

const char* to_string(BrambleMode mode);
BrambleMode parse_bramble_mode(const std::string& text);

/// A family of vertex sets of some base graph, which is passed alongside.
struct StrictBramble {
  BrambleMode mode = BrambleMode::kStrict;
  std::vector<VertexSet> sets;
};

struct BrambleVerdict {
  bool valid = true;
  std::string reason;
  /// Offending set indices; `second` is -1 when a single set is at fault.
  int first = -1;
  int second = -1;
};

/// Every set nonempty and connected, every pair intersecting (strict) or
/// touching. A vertex outside the graph throws StructuralError.
BrambleVerdict validate_bramble(const Graph& g, const StrictBramble& b);

bool covers(VertexSet cover, const std::vector<VertexSet>& sets);

struct BrambleOrder {
  int order = 0;
  /// Lexicographically least among the minimum covers.
  VertexSet cover;
};

/// Exact minimum hitting set by branch and bound.
BrambleOrder bramble_order(const StrictBramble& b);

struct OracleResult {
  int value = 0;
  StrictBramble witness;
};

/// Maximum bramble order by enumerating connected sets, building their
/// compatibility graph and scanning its maximal cliques (Bron-Kerbosch with
/// pivoting, pruned by the order of the remaining candidate family).
/// Refuses above limits.oracle vertices.
OracleResult sbn_oracle(const Graph& g, BrambleMode mode = BrambleMode::kStrict,
                        const Limits& limits = {}, int threads = 1);

/// A bramble of order at least `target`, or nothing if none exists. Same
/// search as the oracle, stopping at the first family reaching the target.
std::optional<StrictBramble> find_bramble_of_order(const Graph& g, int target,
                                                   BrambleMode mode = BrambleMode::kStrict,
                                                   const Limits& limits = {});

/// Asserts that an (X, Y)-separator S covers B when X and Y both cover B.
/// Throws PreconditionError when X, Y or S do not meet the hypotheses.
bool check_cover_separator(const Graph& g, const StrictBramble& b, VertexSet x, VertexSet y,
                           VertexSet s);

/// S is an (X, Y)-separator: every x in X - S and y in Y - S lie in
/// different components of G - S.
bool is_xy_separator(const Graph& g, VertexSet x, VertexSet y, VertexSet s);

}  // namespace sbn
