#include "doctest.h"

#include "dnafsm/error.hpp"
#include "dnafsm/exact.hpp"

using namespace dnafsm;

TEST_CASE("trivial graphs") {
  Graph empty(7);
  auto r = max_independent_set(empty);
  CHECK(r.vertices.size() == 7);
  CHECK(r.optimal);
  CHECK(oracle_mis(empty) == 7);

  Graph k5(5);
  k5.add_clique({0, 1, 2, 3, 4});
  r = max_independent_set(k5);
  CHECK(r.vertices.size() == 1);
  CHECK(r.optimal);
  CHECK(oracle_mis(k5) == 1);

  Graph c5(5);
  for (std::size_t i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(max_independent_set(c5).vertices.size() == 2);
  CHECK(oracle_mis(c5) == 2);

  CHECK(oracle_mis(Graph(0)) == 0);
  CHECK(max_independent_set(Graph(0)).vertices.empty());
}

TEST_CASE("upper bound stops the search") {
  Graph g(6);
  MisOptions o;
  o.upper_bound = 6;
  const auto r = max_independent_set(g, o);
  CHECK(r.optimal);
  CHECK(r.vertices.size() == 6);
}

TEST_CASE("budget and limits") {
  MisOptions o;
  o.budget = seconds_d(0);
  CHECK_THROWS_AS(max_independent_set(Graph(3), o), argument_error);
  CHECK_THROWS_AS(oracle_mis(Graph(200)), budget_error);
}

TEST_CASE("improvement callback sees increasing sizes") {
  const auto g = build_full_conflict_graph(4, 3);
  std::vector<std::size_t> seen;
  MisOptions o;
  o.on_improvement = [&](std::size_t n) { seen.push_back(n); };
  const auto r = max_independent_set(g.graph, o);
  REQUIRE_FALSE(seen.empty());
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.back() == r.vertices.size());
}

TEST_CASE("small exact languages match the oracle") {
  const auto g32 = build_full_conflict_graph(3, 2);
  CHECK(oracle_mis(g32.graph) == 3);
  CHECK(max_independent_set(g32.graph).vertices.size() == 3);

  auto r = exact_generate(3, 2);
  CHECK(r.set.size() == 3);
  CHECK(r.optimal);
  CHECK(verify_distinguished(r.set));

  r = exact_generate(4, 3);
  CHECK(r.set.size() == 12);
  CHECK(r.optimal);
  CHECK(r.bound == 12);
}

TEST_CASE("exact (5,4) reaches the bound") {
  const auto r = exact_generate(5, 4);
  CHECK(r.set.size() == 60);
  CHECK(r.optimal);
}
