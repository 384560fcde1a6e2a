#pragma once

#include <string>
#include <vector>

#include "sbn/bramble.hpp"
#include "sbn/graph.hpp"
#include "sbn/limits.hpp"

namespace sbn {

struct MinorLogEntry {
  /// e.g. "delete vertex 3", "contract edge {0,2}".
  std::string operation;
  Graph minor;
  /// Exact strict bramble number of the minor.
  int sbn = 0;
};

struct ObstructionRecord {
  Graph graph;
  int k = 0;
  /// A strict bramble of order exactly k + 1.
  StrictBramble bramble;
  /// Every one-step minor, each with sbn <= k.
  std::vector<MinorLogEntry> minimality_log;
  /// Name for built-ins ("W4", "H1", "H2"), empty for search output.
  std::string name;
};

/// Re-checks a record from scratch: bramble valid with order k + 1, and
/// every one-step minor decided to have sbn <= k.
bool verify_record(const ObstructionRecord& r, const Limits& limits = {});

struct MinimalityVerdict {
  bool minimal = false;
  /// sbn(G) > k.
  bool exceeds = false;
  std::vector<MinorLogEntry> log;
};

/// sbn(G) > k and every one-step minor has sbn <= k.
MinimalityVerdict is_minor_minimal(const Graph& g, int k, const Limits& limits = {});

/// Minor-minimal graphs with sbn > k on at most n_max vertices, one per
/// isomorphism class, sorted by (order, edge count, canonical code). For
/// k = 2 only 2-connected candidates are examined, otherwise connected ones.
std::vector<ObstructionRecord> obstruction_search(int k, int n_max, const Limits& limits = {},
                                                  int threads = 1);

/// W4, H1 and H2 with the order-3 brambles under a fixed labelling
/// v1..v6 -> 0..5.
const std::vector<ObstructionRecord>& builtin_obstructions();

/// graph6 encodings of the built-ins, in canonical form.
extern const char* const kW4Graph6;
extern const char* const kH1Graph6;
extern const char* const kH2Graph6;

/// True iff none of W4, H1, H2 is a minor of g.
bool excludes_Z(const Graph& g, const Limits& limits = {});

}  // namespace sbn
