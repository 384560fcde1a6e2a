#include "sbn/obstructions.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "sbn/algorithms.hpp"
#include "sbn/canonical.hpp"
#include "sbn/errors.hpp"
#include "sbn/lenient.hpp"
#include "sbn/minor.hpp"

namespace sbn {

MinimalityVerdict is_minor_minimal(const Graph& g, int k, const Limits& limits) {
  MinimalityVerdict verdict;
  verdict.exceeds = !decide_width_le_k(g, k, limits).has_value();
  if (!verdict.exceeds) return verdict;
  verdict.minimal = true;
  for (OneStepMinor& m : one_step_minors(g)) {
    auto [value, d] = min_lenient_width(m.minor, limits);
    (void)d;
    verdict.log.push_back({m.describe(), std::move(m.minor), value});
    if (value > k) {
      verdict.minimal = false;
      break;
    }
  }
  return verdict;
}

bool verify_record(const ObstructionRecord& r, const Limits& limits) {
  if (!validate_bramble(r.graph, r.bramble).valid) return false;
  if (bramble_order(r.bramble).order != r.k + 1) return false;
  auto minors = one_step_minors(r.graph);
  if (minors.size() != r.minimality_log.size()) return false;
  for (std::size_t i = 0; i < minors.size(); ++i) {
    if (minors[i].describe() != r.minimality_log[i].operation) return false;
    if (!(minors[i].minor == r.minimality_log[i].minor)) return false;
    if (!decide_width_le_k(minors[i].minor, r.k, limits)) return false;
  }
  return true;
}

namespace {

std::optional<ObstructionRecord> examine(const Graph& g, int k, const Limits& limits) {
  if (k == 2 ? !is_biconnected(g) : !is_connected(g)) return std::nullopt;
  auto verdict = is_minor_minimal(g, k, limits);
  if (!verdict.minimal) return std::nullopt;
  auto bramble = find_bramble_of_order(g, k + 1, BrambleMode::kStrict, limits);
  if (!bramble || bramble_order(*bramble).order != k + 1) {
    throw InternalError("obstruction_search: no bramble of order k+1 on an obstruction");
  }
  return ObstructionRecord{g, k, *bramble, std::move(verdict.log), {}};
}

}  // namespace

std::vector<ObstructionRecord> obstruction_search(int k, int n_max, const Limits& limits, int threads) {
  if (k < 0) throw DomainError("obstruction_search: k must be non-negative");
  enforce_guard("obstruction_search", n_max, limits.oracle);
  std::vector<Graph> candidates;
  for (int n = 1; n <= n_max; ++n) {
    for (Graph& g : all_graphs(n, limits)) candidates.push_back(std::move(g));
  }
  std::vector<std::optional<ObstructionRecord>> found(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) found[i] = examine(candidates[i], k, limits);
  };
  threads = std::clamp(threads, 1, 64);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<ObstructionRecord> out;
  for (auto& r : found) {
    if (r) out.push_back(std::move(*r));
  }
  // all_graphs lists classes by (edge count, code) for each order.
  std::stable_sort(out.begin(), out.end(), [](const ObstructionRecord& a, const ObstructionRecord& b) {
    if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
    return a.graph.edge_count() < b.graph.edge_count();
  });
  return out;
}

}  // namespace sbn

namespace sbn {

const char* const kW4Graph6 = "Dr{";
const char* const kH1Graph6 = "EElw";
const char* const kH2Graph6 = "E[Sw";

namespace {

struct BuiltinListing {
  const char* name;
  const char* graph6;
  /// labelling[i] is the vertex carrying v_{i+1} in the bramble listing.
  std::vector<Vertex> labelling;
  std::vector<std::vector<int>> listing;
};

ObstructionRecord build(const BuiltinListing& entry) {
  ObstructionRecord r;
  r.name = entry.name;
  r.k = 2;
  r.graph = parse_graph6(entry.graph6);
  for (const auto& set : entry.listing) {
    VertexSet s;
    for (int v : set) s.insert(entry.labelling[v - 1]);
    r.bramble.sets.push_back(s);
  }
  // Records are rechecked on construction rather than trusted.
  if (!validate_bramble(r.graph, r.bramble).valid || bramble_order(r.bramble).order != 3) {
    throw InternalError(std::string("builtin ") + entry.name + ": bramble is not of order three");
  }
  auto verdict = is_minor_minimal(r.graph, 2);
  if (!verdict.minimal) throw InternalError(std::string("builtin ") + entry.name + " is not minor-minimal");
  r.minimality_log = std::move(verdict.log);
  return r;
}

}  // namespace

const std::vector<ObstructionRecord>& builtin_obstructions() {
  // Labellings of the v1..v6 listings were found by trying every vertex
  // permutation of the canonical graphs; the H2 listing also fits H1, the H1
  // listing fits only H1.
  static const std::vector<ObstructionRecord> records = [] {
    std::vector<BuiltinListing> listings{
        {"W4", kW4Graph6, {0, 1, 2, 3, 4},
         {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}, {2, 3, 5}, {2, 3, 4}, {3, 4, 5}, {2, 4, 5}, {1, 2, 4}, {1, 3, 5}}},
        {"H1", kH1Graph6, {0, 3, 1, 4, 5, 2},
         {{1, 2, 3}, {3, 5, 6}, {1, 4, 6}, {2, 4, 5}, {2, 3, 4}, {1, 2, 5}, {1, 4, 5}}},
        {"H2", kH2Graph6, {3, 4, 0, 5, 1, 2},
         {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {2, 4, 5}, {1, 4, 6}, {2, 4, 6}, {3, 5, 6}}},
    };
    std::vector<ObstructionRecord> out;
    for (const auto& s : listings) out.push_back(build(s));
    return out;
  }();
  return records;
}

bool excludes_Z(const Graph& g, const Limits& limits) {
  for (const auto& r : builtin_obstructions()) {
    if (is_minor(g, r.graph, limits)) return false;
  }
  return true;
}

}  // namespace sbn
