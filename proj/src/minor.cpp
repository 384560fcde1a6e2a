#include "sbn/minor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sbn/algorithms.hpp"
#include "sbn/errors.hpp"

namespace sbn {

bool verify_minor_model(const MinorModel& m) {
  const int p = m.pattern.order();
  if (static_cast<int>(m.branch_sets.size()) != p) return false;
  VertexSet used;
  for (VertexSet b : m.branch_sets) {
    if (b.empty() || !b.subset_of(m.host.vertices())) return false;
    if (b.intersects(used)) return false;
    if (!is_connected_set(m.host, b)) return false;
    used |= b;
  }
  for (auto [u, v] : m.pattern.edges()) {
    VertexSet reach = m.branch_sets[u];
    for (Vertex w : m.branch_sets[u]) reach |= m.host.neighbors(w);
    if (!reach.intersects(m.branch_sets[v])) return false;
  }
  return true;
}

namespace {

class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& pattern, std::vector<VertexSet> candidates)
      : host_(host), pattern_(pattern), candidates_(std::move(candidates)) {
    order_.resize(pattern.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pattern.degree(a) > pattern.degree(b);
    });
    position_.resize(pattern.order());
    for (int i = 0; i < pattern.order(); ++i) position_[order_[i]] = i;
    assigned_.assign(pattern.order(), VertexSet{});
  }

  bool run() { return place(0, VertexSet{}); }
  const std::vector<VertexSet>& assignment() const { return assigned_; }

 private:
  // The future only depends on the used host vertices and on the branch sets
  // of placed pattern vertices that still have unplaced neighbours.
  std::vector<std::uint64_t> state_key(int depth, VertexSet used) const {
    std::vector<std::uint64_t> key{static_cast<std::uint64_t>(depth), used.bits()};
    for (int i = 0; i < depth; ++i) {
      Vertex u = order_[i];
      bool live = false;
      for (Vertex w : pattern_.neighbors(u)) live = live || position_[w] >= depth;
      key.push_back(live ? assigned_[u].bits() : 0);
    }
    return key;
  }

  bool place(int depth, VertexSet used) {
    const int p = pattern_.order();
    if (depth == p) return true;
    if (host_.order() - used.size() < p - depth) return false;
    auto key = state_key(depth, used);
    if (failed_.count(key)) return false;
    Vertex u = order_[depth];
    std::vector<VertexSet> required;
    for (Vertex w : pattern_.neighbors(u)) {
      if (position_[w] < depth) required.push_back(assigned_[w]);
    }
    for (VertexSet b : candidates_) {
      if (b.intersects(used)) continue;
      if (host_.order() - used.size() - b.size() < p - depth - 1) continue;
      VertexSet reach = host_.neighbors(b);
      bool ok = true;
      for (VertexSet r : required) ok = ok && reach.intersects(r);
      if (!ok) continue;
      assigned_[u] = b;
      if (place(depth + 1, used | b)) return true;
    }
    assigned_[u] = VertexSet{};
    failed_.insert(std::move(key));
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<VertexSet> candidates_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<VertexSet> assigned_;
  std::set<std::vector<std::uint64_t>> failed_;
};

}  // namespace

std::optional<MinorModel> find_minor(const Graph& host, const Graph& pattern, const Limits& limits) {
  enforce_guard("find_minor (pattern)", pattern.order(), limits.minor_pattern);
  enforce_guard("find_minor (host)", host.order(), limits.exponential);
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;
  if (pattern.order() == 0) return MinorModel{pattern, host, {}};
  // Small branch sets first, so that models are as tight as the search finds.
  auto candidates = connected_sets(host, limits);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  MinorSearch search(host, pattern, std::move(candidates));
  if (!search.run()) return std::nullopt;
  MinorModel m{pattern, host, search.assignment()};
  if (!verify_minor_model(m)) throw InternalError("find_minor: produced an invalid model");
  return m;
}

}  // namespace sbn
