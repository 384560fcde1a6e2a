#pragma once

#include <cstdint>
#include <string>

namespace sbn {

/// Size guards for the exponential procedures. Every procedure refuses with
/// GuardRefusal instead of running beyond its guard.
struct Limits {
  /// Generic exponential primitives (connected-set enumeration, ...).
  int exponential = 16;
  /// Brute-force bramble oracle and bramble witness search.
  int oracle = 8;
  /// Exact lenient width search (polynomial for a fixed width bound).
  int lenient_search = 24;
  /// Exact treewidth subset DP.
  int treewidth = 14;
  /// Pattern size for minor search.
  int minor_pattern = 8;
  /// Canonical labelling.
  int canonical = 16;
  /// Maximal cliques emitted by a single clique enumeration.
  std::int64_t clique_cap = 10'000'000;
  /// Minimal separators emitted by a single enumeration.
  std::int64_t separator_cap = 1'000'000;

  /// Every vertex-count guard set to `n`.
  static Limits uniform(int n);
};

/// Throws GuardRefusal when `value > guard`.
void enforce_guard(const char* what, int value, int guard);

}  // namespace sbn
