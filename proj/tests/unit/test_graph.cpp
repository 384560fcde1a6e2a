#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sbn/algorithms.hpp"
#include "sbn/canonical.hpp"
#include "sbn/errors.hpp"
#include "sbn/graph.hpp"

using namespace sbn;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("edge-list parsing") {
  Graph p3 = parse_graph("3\n0 1\n1 2", GraphFormat::kEdgeList);
  CHECK(p3 == path_graph(3));
  CHECK(parse_graph("3\n0 1\n1 2\n", GraphFormat::kEdgeList) == p3);
  CHECK(parse_edge_list("0") == Graph(0));
  CHECK_THROWS_AS(parse_edge_list("2\n0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2\n0 1\n1 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2\n0 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x"), ParseError);
  try {
    parse_edge_list("3\n0 1\n1 1");
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("graph6 decoding agrees with the reference decoder") {
  CHECK(parse_graph("C~", GraphFormat::kGraph6) == complete_graph(4));
  auto [n, edges] = oracle::decode_graph6("C~");
  CHECK(n == 4);
  CHECK(edges.size() == 6);
  for (int order = 0; order <= 6; ++order) {
    for (const Graph& g : all_graphs(order)) {
      std::string code = to_graph6(g);
      auto [m, es] = oracle::decode_graph6(code);
      CHECK(Graph::from_edges(m, es) == g);
      CHECK(parse_graph6(code) == g);
    }
  }
}

TEST_CASE("graph6 round trip on large random graphs") {
  std::mt19937 rng(7);
  for (int n : {0, 1, 2, 13, 62, 63, 64}) {
    Graph g = random_graph(n, 0.4, rng);
    CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
  }
}

TEST_CASE("graph6 errors carry a byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  try {
    parse_graph6("C 3");
    FAIL("bad byte accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("format detection") {
  CHECK(detect_format("C~") == GraphFormat::kGraph6);
  CHECK(detect_format("C~\n") == GraphFormat::kGraph6);
  CHECK(detect_format("3\n0 1") == GraphFormat::kEdgeList);
}

TEST_CASE("components") {
  CHECK(connected_components(complete_graph(3)).size() == 1);
  auto singletons = connected_components(Graph(3));
  REQUIRE(singletons.size() == 3);
  for (VertexSet c : singletons) CHECK(c.size() == 1);
  auto parts = connected_components(disjoint_union(path_graph(3), Graph(1)));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 3);
  CHECK(parts[1].size() == 1);
}

TEST_CASE("augmented components") {
  auto p3 = augmented_components(path_graph(3), VertexSet{1});
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].members == VertexSet{0, 1});
  CHECK(p3[1].members == VertexSet{1, 2});
  CHECK(p3[0].graph == complete_graph(2));

  auto k4 = augmented_components(complete_graph(4), VertexSet{0});
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].graph == complete_graph(4));
  CHECK(augmented_components(complete_graph(3), VertexSet::range(3)).empty());
}

TEST_CASE("augmented components pairwise meet exactly in S (all graphs up to 5 vertices)") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      auto m = oracle::matrix(g);
      for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        VertexSet s = VertexSet::from_bits(bits);
        auto parts = augmented_components(g, s);
        CHECK(static_cast<int>(parts.size()) == connectivity_degree(g, s));
        CHECK(parts.size() == oracle::components(m, oracle::all(m) & ~bits).size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
          for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK((parts[i].members & parts[j].members) == s);
        }
      }
    }
  }
}

TEST_CASE("connected sets") {
  Graph c4 = cycle_graph(4);
  CHECK_FALSE(is_connected_set(c4, VertexSet{0, 2}));
  CHECK(is_connected_set(c4, VertexSet{}));
  for (Vertex v = 0; v < 4; ++v) CHECK(is_connected_set(c4, VertexSet::singleton(v)));
  Graph k4e = delete_edge(complete_graph(4), {0, 1});
  CHECK_FALSE(is_connected_set(k4e, VertexSet{0, 1}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(7, 0.35, rng);
    auto m = oracle::matrix(g);
    for (std::uint64_t bits = 0; bits < 128; ++bits) {
      CHECK(is_connected_set(g, VertexSet::from_bits(bits)) == oracle::connected(m, bits));
    }
  }
}

TEST_CASE("one-step minors") {
  Graph k3 = complete_graph(3);
  auto minors = one_step_minors(k3);
  CHECK(minors.size() == 3 + 3 + 3);
  CHECK(minors[0].op == MinorOp::kDeleteVertex);
  CHECK(minors.back().op == MinorOp::kContractEdge);
  CHECK(contract_edge(k3, {0, 1}) == complete_graph(2));
  CHECK(contract_edge(path_graph(3), {0, 1}) == complete_graph(2));
  CHECK(delete_vertex(cycle_graph(4), 0) == path_graph(3));
}

TEST_CASE("lexicographic product") {
  CHECK(lexicographic_product(complete_graph(2), complete_graph(2)) == complete_graph(4));
  CHECK(lexicographic_product(path_graph(3), complete_graph(1)) == path_graph(3));
  // Star with two leaves times K2: 3 inner edges and 2 * 4 across tree edges.
  Graph star = lexicographic_product(star_graph(2), complete_graph(2));
  CHECK(star.order() == 6);
  CHECK(star.edge_count() == 11);
  // Vertex count and edge formula for trees times cliques.
  for (int k = 1; k <= 4; ++k) {
    for (const Graph& t : {path_graph(5), star_graph(4), path_graph(1)}) {
      Graph p = lexicographic_product(t, complete_graph(k));
      CHECK(p.order() == t.order() * k);
      CHECK(p.edge_count() == k * k * t.edge_count() + t.order() * k * (k - 1) / 2);
    }
  }
  // Adjacency follows the definition pair by pair.
  Graph g = cycle_graph(4);
  Graph h = path_graph(3);
  Graph p = lexicographic_product(g, h);
  for (int a = 0; a < p.order(); ++a) {
    for (int b = 0; b < p.order(); ++b) {
      if (a == b) continue;
      int u = a / 3, v = a % 3, w = b / 3, z = b % 3;
      bool expected = g.adjacent(u, w) || (u == w && h.adjacent(v, z));
      CHECK(p.adjacent(a, b) == expected);
    }
  }
}

TEST_CASE("graph invariants") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), StructuralError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), StructuralError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), StructuralError);
  Graph w = wheel_graph(4);
  CHECK(w.order() == 5);
  CHECK(w.edge_count() == 8);
}
