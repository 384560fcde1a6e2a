#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sbn/algorithms.hpp"
#include "sbn/bramble.hpp"
#include "sbn/canonical.hpp"
#include "sbn/domino.hpp"
#include "sbn/errors.hpp"
#include "sbn/reduction.hpp"

using namespace sbn;

namespace {

std::vector<std::uint64_t> bits_of(const std::vector<VertexSet>& sets) {
  std::vector<std::uint64_t> out;
  for (VertexSet s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

// Paths are disjoint, run from X to Y along edges, and match the separator.
void check_paths(const Graph& g, VertexSet x, VertexSet y, const DisjointPaths& dp) {
  VertexSet used;
  for (const auto& p : dp.paths) {
    REQUIRE_FALSE(p.empty());
    CHECK(x.contains(p.front()));
    CHECK(y.contains(p.back()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK_FALSE(used.contains(p[i]));
      used.insert(p[i]);
      if (i > 0) CHECK(g.adjacent(p[i - 1], p[i]));
    }
  }
  CHECK(dp.separator.size() == static_cast<int>(dp.paths.size()));
  CHECK(is_xy_separator(g, x, y, dp.separator));
}

}  // namespace

TEST_CASE("minimal separators: examples") {
  CHECK(minimal_separators(complete_graph(4)).empty());
  CHECK(minimal_separators(path_graph(3)) == std::vector<VertexSet>{VertexSet{1}});
  CHECK(minimal_separators(gen_chain(8, 2)) == std::vector<VertexSet>{VertexSet{2, 3}, VertexSet{4, 5}});
  auto parts = augmented_components(gen_chain(8, 2), VertexSet{2, 3});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].members.size() == 4);
  CHECK(parts[1].members.size() == 6);
  CHECK(minimal_separators(Graph(2)) == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("minimal separators agree with brute force on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      auto mine = minimal_separators(g);
      CHECK(bits_of(mine) == oracle::minimal_separators(oracle::matrix(g)));
      CHECK(std::is_sorted(mine.begin(), mine.end(), LexLess{}));
    }
  }
}

TEST_CASE("minimal separator guards") {
  Limits tight;
  tight.separator_cap = 1;
  CHECK_THROWS_AS(minimal_separators(cycle_graph(6), tight), GuardRefusal);
}

TEST_CASE("separator predicates") {
  Graph c4 = cycle_graph(4);
  CHECK(separates(c4, VertexSet{1, 3}, 0, 2));
  CHECK_FALSE(separates(c4, VertexSet{1}, 0, 2));
  CHECK(is_minimal_separator_for(c4, VertexSet{1, 3}, 0, 2));
  CHECK_FALSE(is_minimal_separator_for(gen_chain(8, 2), VertexSet{2, 3, 4}, 0, 7));
  CHECK(full_components(path_graph(3), VertexSet{1}).size() == 2);
}

TEST_CASE("disjoint paths: examples") {
  Graph k4 = complete_graph(4);
  auto dp = disjoint_paths(k4, VertexSet{0, 1}, VertexSet{2, 3});
  CHECK(dp.paths.size() == 2);
  check_paths(k4, VertexSet{0, 1}, VertexSet{2, 3}, dp);

  auto p3 = disjoint_paths(path_graph(3), VertexSet{0}, VertexSet{2});
  REQUIRE(p3.paths.size() == 1);
  CHECK(p3.paths[0] == std::vector<Vertex>{0, 1, 2});

  // Two original vertices of the K3 gadget: 2k-1 = 3 length-two paths plus
  // the detour through the third original vertex.
  GadgetMap h = gadget(complete_graph(3), 2);
  CHECK(local_connectivity(h.output, 0, 1) >= 3);
  CHECK(local_connectivity(h.output, 0, 1) == 4);
  CHECK(disjoint_paths(h.output, VertexSet{0}, VertexSet{1}).paths.size() == 1);
}

TEST_CASE("Menger duality against exhaustive separators (random graphs, 7 vertices)") {
  std::mt19937 rng(11);
  std::bernoulli_distribution coin(0.4);
  std::uniform_int_distribution<std::uint64_t> pick(1, 127);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g(7);
    for (int u = 0; u < 7; ++u) {
      for (int v = u + 1; v < 7; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    auto m = oracle::matrix(g);
    VertexSet x = VertexSet::from_bits(pick(rng));
    VertexSet y = VertexSet::from_bits(pick(rng));
    auto dp = disjoint_paths(g, x, y);
    check_paths(g, x, y, dp);
    CHECK(static_cast<int>(dp.paths.size()) == oracle::min_xy_separator(m, x.bits(), y.bits()));
    for (Vertex a = 0; a < 7; ++a) {
      for (Vertex b = a + 1; b < 7; ++b) {
        if (!g.adjacent(a, b)) CHECK(local_connectivity(g, a, b) == oracle::min_vertex_cut(m, a, b));
      }
    }
  }
}

TEST_CASE("chordality: examples") {
  auto c4 = is_chordal(cycle_graph(4));
  CHECK_FALSE(c4.chordal);
  CHECK(c4.chordless_cycle.size() == 4);
  auto k4 = is_chordal(complete_graph(4));
  CHECK(k4.chordal);
  CHECK(k4.maximal_cliques.size() == 1);
  auto chain = is_chordal(gen_chain(8, 2));
  CHECK(chain.chordal);
  REQUIRE(chain.maximal_cliques.size() == 3);
  for (VertexSet c : chain.maximal_cliques) CHECK(c.size() == 4);
}

TEST_CASE("chordality agrees with the induced-cycle definition (all graphs up to 6 vertices)") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      auto m = oracle::matrix(g);
      auto r = is_chordal(g);
      REQUIRE(r.chordal == oracle::chordal(m));
      if (r.chordal) {
        CHECK(bits_of(r.maximal_cliques) == oracle::maximal_cliques(m));
        // Perfect elimination: later neighbours of each vertex form a clique.
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[r.elimination_order[i]] = i;
        for (Vertex v = 0; v < n; ++v) {
          std::uint64_t later = 0;
          for (Vertex w : g.neighbors(v)) {
            if (pos[w] > pos[v]) later |= 1ULL << w;
          }
          CHECK(oracle::clique(m, later));
        }
        // Hereditary: every induced subgraph stays chordal.
        for (std::uint64_t bits = 1; bits < (1ULL << n); ++bits) {
          CHECK(is_chordal(induced_subgraph(g, VertexSet::from_bits(bits)).graph).chordal);
        }
      } else {
        const auto& cyc = r.chordless_cycle;
        REQUIRE(cyc.size() >= 4);
        VertexSet on = VertexSet::of(cyc);
        CHECK(on.size() == static_cast<int>(cyc.size()));
        // Consecutive vertices adjacent, no chords.
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          for (std::size_t j = i + 1; j < cyc.size(); ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == cyc.size() - 1);
            CHECK(g.adjacent(cyc[i], cyc[j]) == consecutive);
          }
        }
      }
    }
  }
}

TEST_CASE("maximal cliques agree with brute force and respect the cap") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) CHECK(bits_of(maximal_cliques(g)) == oracle::maximal_cliques(oracle::matrix(g)));
  }
  Limits cap;
  cap.clique_cap = 2;
  CHECK_THROWS_AS(maximal_cliques(cycle_graph(5), cap), GuardRefusal);
}

TEST_CASE("biconnectivity") {
  CHECK(is_biconnected(cycle_graph(4)));
  CHECK_FALSE(is_biconnected(path_graph(3)));
  CHECK_FALSE(is_biconnected(complete_graph(2)));
  CHECK(is_biconnected(wheel_graph(4)));
}
