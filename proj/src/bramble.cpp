#include "sbn/bramble.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "sbn/algorithms.hpp"
#include "sbn/errors.hpp"

namespace sbn {

const char* to_string(BrambleMode mode) {
  return mode == BrambleMode::kStrict ? "strict" : "touching";
}

BrambleMode parse_bramble_mode(const std::string& text) {
  if (text == "strict") return BrambleMode::kStrict;
  if (text == "touching") return BrambleMode::kTouching;
  throw StructuralError("unknown bramble mode '" + text + "'");
}

namespace {

bool compatible(const Graph& g, BrambleMode mode, VertexSet a, VertexSet b) {
  if (a.intersects(b)) return true;
  return mode == BrambleMode::kTouching && g.neighbors(a).intersects(b);
}

}  // namespace

BrambleVerdict validate_bramble(const Graph& g, const StrictBramble& b) {
  for (VertexSet s : b.sets) {
    if (!s.subset_of(g.vertices())) {
      throw StructuralError("bramble set " + s.to_string() + " has a vertex outside the graph");
    }
  }
  const int m = static_cast<int>(b.sets.size());
  for (int i = 0; i < m; ++i) {
    if (b.sets[i].empty()) return {false, "set " + std::to_string(i) + " is empty", i, -1};
    if (!is_connected_set(g, b.sets[i])) {
      return {false, "set " + b.sets[i].to_string() + " is not connected", i, -1};
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!compatible(g, b.mode, b.sets[i], b.sets[j])) {
        std::string how = b.mode == BrambleMode::kStrict ? "disjoint" : "not touching";
        return {false, "sets " + b.sets[i].to_string() + " and " + b.sets[j].to_string() + " are " + how,
                i, j};
      }
    }
  }
  return {};
}

bool covers(VertexSet cover, const std::vector<VertexSet>& sets) {
  return std::all_of(sets.begin(), sets.end(), [&](VertexSet s) { return s.intersects(cover); });
}

namespace {

// Is there a cover of `sets` inside `allowed` with at most `budget` vertices?
// Branches on the vertices of the smallest unhit set.
bool hittable(const std::vector<VertexSet>& sets, VertexSet chosen, VertexSet allowed, int budget) {
  const VertexSet* pick = nullptr;
  int pick_size = 0;
  for (const VertexSet& s : sets) {
    if (s.intersects(chosen)) continue;
    VertexSet options = s & allowed;
    if (options.empty()) return false;
    if (pick == nullptr || options.size() < pick_size) {
      pick = &s;
      pick_size = options.size();
    }
  }
  if (pick == nullptr) return true;
  if (budget == 0) return false;
  VertexSet options = *pick & allowed;
  for (Vertex v : options) {
    if (hittable(sets, chosen | VertexSet::singleton(v), allowed, budget - 1)) return true;
    // Covers through v are exhausted; later branches may skip it.
    allowed.erase(v);
  }
  return false;
}

VertexSet support(const std::vector<VertexSet>& sets) {
  VertexSet all;
  for (VertexSet s : sets) all |= s;
  return all;
}

}  // namespace

BrambleOrder bramble_order(const StrictBramble& b) {
  if (b.sets.empty()) return {0, VertexSet{}};
  for (VertexSet s : b.sets) {
    if (s.empty()) throw PreconditionError("bramble_order: empty set has no cover");
  }
  VertexSet all = support(b.sets);
  int order = 1;
  while (!hittable(b.sets, VertexSet{}, all, order)) ++order;
  // Greedy lexicographic reconstruction: fix the smallest feasible vertex at
  // each position.
  VertexSet cover;
  Vertex floor = 0;
  for (int placed = 0; placed < order && !covers(cover, b.sets); ++placed) {
    for (Vertex v = floor; v < kMaxVertices; ++v) {
      if (!all.contains(v)) continue;
      VertexSet later = all - VertexSet::range(v + 1);
      if (hittable(b.sets, cover | VertexSet::singleton(v), later, order - placed - 1)) {
        cover.insert(v);
        floor = v + 1;
        break;
      }
    }
  }
  if (cover.size() != order || !covers(cover, b.sets)) {
    throw InternalError("bramble_order: cover reconstruction failed");
  }
  return {order, cover};
}

namespace {

// Dynamic bitset over the connected sets of the graph.
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool any() const {
    return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] |= o.w[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= ~o.w[i];
    return r;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::uint64_t x = w[i]; x != 0; x &= x - 1) f(static_cast<int>(i * 64 + std::countr_zero(x)));
    }
  }
};

class BrambleSearch {
 public:
  BrambleSearch(const Graph& g, BrambleMode mode, const Limits& limits)
      : n_(g.order()), sets_(connected_sets(g, limits)) {
    const int m = static_cast<int>(sets_.size());
    adj_.assign(m, Bits(m));
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (compatible(g, mode, sets_[i], sets_[j])) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
      }
    }
    // Masks by increasing popcount for cover scans.
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n_); ++c) by_size_.push_back(c);
    std::stable_sort(by_size_.begin(), by_size_.end(),
                     [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  }

  int set_count() const { return static_cast<int>(sets_.size()); }
  const std::vector<VertexSet>& sets() const { return sets_; }

  // Minimum cover size of the family, computed with a subset table: a mask
  // c covers iff no member lies inside the complement of c.
  int order(const Bits& family) const {
    const std::uint64_t full = (std::uint64_t{1} << n_) - 1;
    std::vector<char> down(std::size_t{1} << n_, 0);
    bool any = false;
    family.for_each([&](int i) {
      down[sets_[i].bits()] = 1;
      any = true;
    });
    if (!any) return 0;
    for (int b = 0; b < n_; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if ((mask & bit) && down[mask ^ bit]) down[mask] = 1;
      }
    }
    for (std::uint64_t c : by_size_) {
      if (!down[full & ~c]) return std::popcount(c);
    }
    return n_;
  }

  struct Branch {
    Bits r, p, x;
  };

  std::vector<Branch> root_branches() const {
    const int m = set_count();
    Bits p(m), x(m);
    for (int i = 0; i < m; ++i) p.set(i);
    std::vector<Branch> out;
    int pivot = choose_pivot(p, x);
    Bits todo = pivot < 0 ? p : p.minus(adj_[pivot]);
    todo.for_each([&](int v) {
      Bits r(m);
      r.set(v);
      out.push_back({r, p & adj_[v], x & adj_[v]});
      p.reset(v);
      x.set(v);
    });
    return out;
  }

  // Maximization: returns the best (value, family) found below the branch,
  // exploring only subtrees whose bound beats both `local` and `*global`.
  void maximize(const Bits& r, Bits p, Bits x, int& best, Bits& best_family,
                const std::atomic<int>* global) const {
    int bound = order(r | p);
    if (bound <= best || (global != nullptr && bound < global->load())) return;
    if (!p.any()) {
      // Here order(r) == bound > best.
      best = bound;
      best_family = r;
      return;
    }
    int pivot = choose_pivot(p, x);
    Bits todo = p.minus(adj_[pivot]);
    todo.for_each([&](int v) {
      Bits r2 = r;
      r2.set(v);
      maximize(r2, p & adj_[v], x & adj_[v], best, best_family, global);
      p.reset(v);
      x.set(v);
    });
  }

  bool reach(const Bits& r, Bits p, Bits x, int target, Bits& found) const {
    if (order(r) >= target) {
      found = r;
      return true;
    }
    if (!p.any() || order(r | p) < target) return false;
    int pivot = choose_pivot(p, x);
    Bits todo = p.minus(adj_[pivot]);
    bool done = false;
    todo.for_each([&](int v) {
      if (done) return;
      Bits r2 = r;
      r2.set(v);
      done = reach(r2, p & adj_[v], x & adj_[v], target, found);
      p.reset(v);
      x.set(v);
    });
    return done;
  }

  std::vector<VertexSet> members(const Bits& family) const {
    std::vector<VertexSet> out;
    family.for_each([&](int i) { out.push_back(sets_[i]); });
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
  }

 private:
  int choose_pivot(const Bits& p, const Bits& x) const {
    int pivot = -1;
    int best = -1;
    (p | x).for_each([&](int u) {
      int c = (p & adj_[u]).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    return pivot;
  }

  int n_;
  std::vector<VertexSet> sets_;
  std::vector<Bits> adj_;
  std::vector<std::uint64_t> by_size_;
};

}  // namespace

OracleResult sbn_oracle(const Graph& g, BrambleMode mode, const Limits& limits, int threads) {
  enforce_guard("sbn_oracle", g.order(), limits.oracle);
  OracleResult result;
  result.witness.mode = mode;
  if (g.order() == 0) return result;
  BrambleSearch search(g, mode, limits);
  auto branches = search.root_branches();
  const int count = static_cast<int>(branches.size());
  std::vector<int> values(count, 0);
  std::vector<Bits> families(count, Bits(search.set_count()));
  std::atomic<int> global{0};
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      int best = 0;
      search.maximize(branches[i].r, branches[i].p, branches[i].x, best, families[i], &global);
      values[i] = best;
      int seen = global.load();
      while (best > seen && !global.compare_exchange_weak(seen, best)) {
      }
    }
  };
  threads = std::clamp(threads, 1, 64);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // The earliest branch holding the maximum gives the same witness as a
  // sequential scan, whatever the thread count.
  int winner = -1;
  for (int i = 0; i < count; ++i) {
    if (winner < 0 || values[i] > values[winner]) winner = i;
  }
  result.value = values[winner];
  result.witness.sets = search.members(families[winner]);
  if (!validate_bramble(g, result.witness).valid ||
      bramble_order(result.witness).order != result.value) {
    throw InternalError("sbn_oracle: witness failed revalidation");
  }
  return result;
}

std::optional<StrictBramble> find_bramble_of_order(const Graph& g, int target, BrambleMode mode,
                                                   const Limits& limits) {
  enforce_guard("find_bramble_of_order", g.order(), limits.oracle);
  if (target <= 0) return StrictBramble{mode, {}};
  if (g.order() == 0) return std::nullopt;
  BrambleSearch search(g, mode, limits);
  const int m = search.set_count();
  Bits r(m), p(m), x(m), found(m);
  for (int i = 0; i < m; ++i) p.set(i);
  if (!search.reach(r, p, x, target, found)) return std::nullopt;
  StrictBramble b{mode, search.members(found)};
  if (!validate_bramble(g, b).valid || bramble_order(b).order < target) {
    throw InternalError("find_bramble_of_order: witness failed revalidation");
  }
  return b;
}

bool is_xy_separator(const Graph& g, VertexSet x, VertexSet y, VertexSet s) {
  auto comps = components_within(g, g.vertices() - s);
  for (VertexSet c : comps) {
    if (c.intersects(x) && c.intersects(y)) return false;
  }
  return true;
}

bool check_cover_separator(const Graph& g, const StrictBramble& b, VertexSet x, VertexSet y,
                           VertexSet s) {
  if (!covers(x, b.sets)) throw PreconditionError("check_cover_separator: X does not cover the bramble");
  if (!covers(y, b.sets)) throw PreconditionError("check_cover_separator: Y does not cover the bramble");
  if (!is_xy_separator(g, x, y, s)) {
    throw PreconditionError("check_cover_separator: S is not an (X,Y)-separator");
  }
  return covers(s, b.sets);
}

}  // namespace sbn
