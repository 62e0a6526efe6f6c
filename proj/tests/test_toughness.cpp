#include <doctest.h>

#include <random>

#include "oretough/errors.hpp"
#include "oretough/generate.hpp"
#include "oretough/toughness.hpp"
#include "test_util.hpp"

using namespace oretough;
using namespace oretough::testutil;

TEST_CASE("named graphs") {
  CHECK(toughness_exact(complete_bipartite(2, 3)).value == Rational(2, 3));
  CHECK(toughness_exact(complete_bipartite(3, 3)).value == Rational(1));
  CHECK(toughness_exact(cycle_graph(6)).value == Rational(1));
  CHECK(toughness_exact(path_graph(3)).value == Rational(1, 2));
  CHECK(toughness_exact(petersen()).value == Rational(4, 3));
  CHECK(toughness_exact(complete_graph(4)).value.is_infinite());
  CHECK_FALSE(toughness_exact(complete_graph(4)).witness.has_value());
  CHECK(toughness_exact(complete_graph(1)).value.is_infinite());

  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  auto r = toughness_exact(disconnected);
  CHECK(r.value == Rational(0));
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->cutset == 0);
  CHECK(r.witness->component_count == 2);
}

TEST_CASE("witness cutsets are valid and attain the ratio") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.45, rng);
    auto r = toughness_exact(g);
    if (!r.witness) {
      CHECK(g.is_complete());
      continue;
    }
    auto comps = g.components(r.witness->cutset);
    CHECK(static_cast<int>(comps.size()) == r.witness->component_count);
    CHECK(r.witness->component_count >= 2);
    CHECK(r.value == Rational(set_size(r.witness->cutset), r.witness->component_count));
    // shaved: dropping any cutset vertex must lower the component count
    for (VertexSet m = r.witness->cutset; m; m &= m - 1) {
      VertexSet v = m & -m;
      CHECK(g.components(r.witness->cutset & ~v).size() < comps.size());
    }
  }
}

TEST_CASE("agrees with the exhaustive oracle") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : graph_classes(n, GraphClass::all))
      CHECK(toughness_exact(g).value == toughness_naive_oracle(g));
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 7 + static_cast<int>(rng() % 4);
    Graph g = random_graph(n, 0.3 + 0.05 * (trial % 9), rng);
    CHECK(toughness_exact(g).value == toughness_naive_oracle(g));
  }
  CHECK_THROWS_AS(toughness_naive_oracle(Graph(17)), BudgetError);
}

TEST_CASE("is_t_tough thresholds") {
  Graph k23 = complete_bipartite(2, 3);
  CHECK(is_t_tough(k23, Rational(2, 3)).tough);
  CHECK(is_t_tough(k23, Rational(1, 2)).tough);
  auto fail = is_t_tough(k23, Rational(3, 4));
  CHECK_FALSE(fail.tough);
  REQUIRE(fail.violation.has_value());
  CHECK(fail.violation->cutset == (bit(0) | bit(1)));
  CHECK(fail.violation->component_count == 3);
  CHECK(is_t_tough(complete_graph(5), Rational(1000)).tough);
  CHECK(is_t_tough(Graph(3), Rational(0)).tough);
  CHECK_FALSE(is_t_tough(Graph(3), Rational(1, 100)).tough);
}
