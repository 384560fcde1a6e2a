#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sbn/algorithms.hpp"
#include "sbn/bramble.hpp"
#include "sbn/canonical.hpp"
#include "sbn/domino.hpp"
#include "sbn/errors.hpp"
#include "sbn/minor.hpp"
#include "sbn/obstructions.hpp"

using namespace sbn;

namespace {

std::vector<std::uint64_t> masks(const StrictBramble& b) {
  std::vector<std::uint64_t> out;
  for (VertexSet s : b.sets) out.push_back(s.bits());
  return out;
}

StrictBramble from_listing(const std::vector<std::vector<int>>& listing, const std::vector<Vertex>& label) {
  StrictBramble b;
  for (const auto& set : listing) {
    VertexSet s;
    for (int v : set) s.insert(label[v - 1]);
    b.sets.push_back(s);
  }
  return b;
}

}  // namespace

TEST_CASE("validate_bramble: examples") {
  Graph k3 = complete_graph(3);
  StrictBramble tri{BrambleMode::kStrict, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(validate_bramble(k3, tri).valid);

  StrictBramble apart{BrambleMode::kStrict, {{0}, {2}}};
  auto v = validate_bramble(path_graph(3), apart);
  CHECK_FALSE(v.valid);
  CHECK(v.first == 0);
  CHECK(v.second == 1);
  apart.mode = BrambleMode::kTouching;
  CHECK_FALSE(validate_bramble(path_graph(3), apart).valid);
  StrictBramble touching{BrambleMode::kTouching, {{0}, {1}}};
  CHECK(validate_bramble(path_graph(3), touching).valid);

  StrictBramble split{BrambleMode::kStrict, {{0, 2}}};
  CHECK_FALSE(validate_bramble(path_graph(3), split).valid);
  StrictBramble empty_set{BrambleMode::kStrict, {VertexSet{}}};
  CHECK_FALSE(validate_bramble(path_graph(3), empty_set).valid);
  StrictBramble outside{BrambleMode::kStrict, {{0, 5}}};
  CHECK_THROWS_AS(validate_bramble(path_graph(3), outside), StructuralError);
}

TEST_CASE("the three listed order-three brambles") {
  // Listings over v1..v6 together with the labelling that makes them fit.
  StrictBramble w4 = from_listing({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}, {2, 3, 5}, {2, 3, 4}, {3, 4, 5},
                                   {2, 4, 5}, {1, 2, 4}, {1, 3, 5}},
                                  {0, 1, 2, 3, 4});
  StrictBramble h1 = from_listing({{1, 2, 3}, {3, 5, 6}, {1, 4, 6}, {2, 4, 5}, {2, 3, 4}, {1, 2, 5}, {1, 4, 5}},
                                  {0, 3, 1, 4, 5, 2});
  StrictBramble h2 = from_listing({{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {2, 4, 5}, {1, 4, 6}, {2, 4, 6}, {3, 5, 6}},
                                  {3, 4, 0, 5, 1, 2});
  auto check = [](const char* g6, const StrictBramble& b) {
    Graph g = parse_graph6(g6);
    CHECK(validate_bramble(g, b).valid);
    CHECK(bramble_order(b).order == 3);
    CHECK(oracle::min_hitting_set(masks(b), g.order()) == 3);
  };
  check(kW4Graph6, w4);
  check(kH1Graph6, h1);
  check(kH2Graph6, h2);
  CHECK(validate_bramble(wheel_graph(4), w4).valid);
}

TEST_CASE("bramble_order: examples") {
  StrictBramble tri{BrambleMode::kStrict, {{0, 1}, {1, 2}, {0, 2}}};
  auto o = bramble_order(tri);
  CHECK(o.order == 2);
  CHECK(o.cover == VertexSet{0, 1});
  CHECK(bramble_order(StrictBramble{BrambleMode::kStrict, {{0, 1, 2}}}).order == 1);
  CHECK(bramble_order(StrictBramble{}).order == 0);
}

TEST_CASE("bramble_order is an exact, lexicographically least hitting set") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::uint64_t> pick(1, 255);
  std::uniform_int_distribution<int> count(1, 9);
  for (int trial = 0; trial < 400; ++trial) {
    StrictBramble b;
    std::vector<std::uint64_t> sets;
    for (int i = count(rng); i > 0; --i) {
      sets.push_back(pick(rng));
      b.sets.push_back(VertexSet::from_bits(sets.back()));
    }
    auto o = bramble_order(b);
    int best = oracle::min_hitting_set(sets, 8);
    CHECK(o.order == best);
    CHECK(o.cover.size() == best);
    CHECK(covers(o.cover, b.sets));
    // No lexicographically smaller minimum cover exists.
    for (std::uint64_t c = 0; c < 256; ++c) {
      VertexSet cv = VertexSet::from_bits(c);
      if (cv.size() == best && covers(cv, b.sets)) CHECK_FALSE(lex_less(cv, o.cover));
    }
  }
}

TEST_CASE("sbn_oracle: examples") {
  CHECK(sbn_oracle(path_graph(3)).value == 1);
  CHECK(sbn_oracle(complete_graph(4)).value == 2);
  CHECK(sbn_oracle(complete_graph(3)).value == 2);
  CHECK(sbn_oracle(wheel_graph(4)).value == 3);
  CHECK(sbn_oracle(Graph(0)).value == 0);
  CHECK_THROWS_AS(sbn_oracle(path_graph(9)), GuardRefusal);
}

TEST_CASE("sbn_oracle agrees with plain Bron-Kerbosch and brute hitting sets (up to 5 vertices)") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      auto m = oracle::matrix(g);
      for (BrambleMode mode : {BrambleMode::kStrict, BrambleMode::kTouching}) {
        auto r = sbn_oracle(g, mode);
        CHECK(r.value == oracle::bramble_number(m, mode == BrambleMode::kStrict));
        CHECK(r.witness.mode == mode);
        CHECK(validate_bramble(g, r.witness).valid);
        CHECK(bramble_order(r.witness).order == r.value);
      }
    }
  }
}

TEST_CASE("bramble number laws on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      auto strict = sbn_oracle(g, BrambleMode::kStrict);
      auto touching = sbn_oracle(g, BrambleMode::kTouching);
      CHECK(strict.value <= touching.value);
      CHECK(touching.value <= 2 * strict.value);
      CHECK(touching.value == oracle::treewidth(oracle::matrix(g)) + 1);
      // Acyclic graphs are exactly the nonempty graphs of strict order one.
      CHECK((strict.value == 1) == !is_minor(g, complete_graph(3)));
      // Components: the maximum over the parts.
      int best = 0;
      for (VertexSet c : connected_components(g)) best = std::max(best, sbn_oracle(induced_subgraph(g, c).graph).value);
      CHECK(strict.value == best);
    }
  }
}

TEST_CASE("strict bramble number is minor monotone (up to 5 vertices)") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      int value = sbn_oracle(g).value;
      for (const auto& m : one_step_minors(g)) CHECK(sbn_oracle(m.minor).value <= value);
    }
  }
}

TEST_CASE("oracle witness does not depend on the thread count") {
  for (const Graph& g : connected_graphs(6)) {
    auto one = sbn_oracle(g, BrambleMode::kStrict, {}, 1);
    auto three = sbn_oracle(g, BrambleMode::kStrict, {}, 3);
    CHECK(one.value == three.value);
    CHECK(masks(one.witness) == masks(three.witness));
  }
}

TEST_CASE("adding compatible sets never lowers the order") {
  for (const Graph& g : connected_graphs(5)) {
    auto base = find_bramble_of_order(g, 1);
    REQUIRE(base);
    StrictBramble b{BrambleMode::kStrict, {base->sets.front()}};
    int order = bramble_order(b).order;
    for (VertexSet s : connected_sets(g)) {
      StrictBramble bigger = b;
      bigger.sets.push_back(s);
      if (!validate_bramble(g, bigger).valid) continue;
      int next = bramble_order(bigger).order;
      CHECK(next >= order);
      b = bigger;
      order = next;
    }
  }
}

TEST_CASE("find_bramble_of_order") {
  auto w = find_bramble_of_order(wheel_graph(4), 3);
  REQUIRE(w);
  CHECK(validate_bramble(wheel_graph(4), *w).valid);
  CHECK(bramble_order(*w).order >= 3);
  CHECK_FALSE(find_bramble_of_order(complete_graph(4), 3));
  CHECK_FALSE(find_bramble_of_order(path_graph(5), 2));
}

TEST_CASE("check_cover_separator") {
  Graph k3 = complete_graph(3);
  StrictBramble tri{BrambleMode::kStrict, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(check_cover_separator(k3, tri, VertexSet{0, 1}, VertexSet{0, 1}, VertexSet{0, 1}));
  StrictBramble one{BrambleMode::kStrict, {{1, 2}}};
  CHECK(check_cover_separator(path_graph(4), one, VertexSet{1}, VertexSet{2}, VertexSet{1}));

  // On the chain the three maximal cliques are not pairwise intersecting and
  // neither separator covers them, so that family violates the hypotheses.
  Graph chain = gen_chain(8, 2);
  StrictBramble cliques{BrambleMode::kStrict, {}};
  for (VertexSet c : maximal_cliques(chain)) cliques.sets.push_back(c);
  VertexSet x{2, 3}, y{4, 5};
  CHECK_THROWS_AS(check_cover_separator(chain, cliques, x, y, x), PreconditionError);
  // Unions of consecutive cliques do form a bramble covered by both separators.
  StrictBramble unions{BrambleMode::kStrict, {{0, 1, 2, 3, 4, 5}, {2, 3, 4, 5, 6, 7}, {2, 3, 4, 5}}};
  REQUIRE(validate_bramble(chain, unions).valid);
  CHECK(check_cover_separator(chain, unions, x, y, x));
  CHECK(check_cover_separator(chain, unions, x, y, y));

  // Violated hypotheses are errors, not false answers.
  CHECK_THROWS_AS(check_cover_separator(k3, tri, VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 1}), PreconditionError);
  CHECK_THROWS_AS(check_cover_separator(path_graph(4), one, VertexSet{0, 1, 2}, VertexSet{3, 2}, VertexSet{}),
                  PreconditionError);
}

TEST_CASE("cover-separator lemma holds exhaustively on small brambles") {
  for (const Graph& g : connected_graphs(5)) {
    auto b = sbn_oracle(g).witness;
    const int n = g.order();
    std::vector<VertexSet> cov;
    for (std::uint64_t c = 0; c < (1ULL << n); ++c) {
      if (covers(VertexSet::from_bits(c), b.sets)) cov.push_back(VertexSet::from_bits(c));
    }
    for (VertexSet x : cov) {
      for (VertexSet y : cov) {
        for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
          VertexSet sep = VertexSet::from_bits(s);
          if (is_xy_separator(g, x, y, sep)) CHECK(check_cover_separator(g, b, x, y, sep));
        }
      }
    }
  }
}
