#include <doctest.h>

#include "indepbound/constructions.hpp"
#include "indepbound/error.hpp"
#include "indepbound/independence.hpp"
#include "../support/oracles.hpp"

using namespace indepbound;

TEST_CASE("exact_alpha small cases") {
  CHECK(exact_alpha(Hypergraph(3, 3, {{0, 1, 2}})) == 2);
  CHECK(exact_alpha(Hypergraph(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 1);
  CHECK(exact_alpha(Hypergraph(2, 5, {})) == 5);
  // 3x3 grid lines: 6 cells avoiding all rows and columns fully.
  CHECK(exact_alpha(i_unit(3, 1)) == 6);
  CHECK(exact_alpha(bipartite_tower(2)) == 3);
}

TEST_CASE("exact_alpha witness is independent and maximal") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    auto g = oracle::random_graph(4 + rep % 10, 0.35, rng);
    auto w = maximum_independent_set(g);
    CHECK(is_independent(g, w));
    CHECK(w.size() == oracle::alpha(g));
  }
  for (int rep = 0; rep < 60; ++rep) {
    auto h = oracle::random_linear(3, 6 + rep % 8, 30, rng);
    CHECK(exact_alpha(h) == oracle::alpha(h));
  }
}

TEST_CASE("exact_alpha capacity") {
  CHECK_THROWS_AS(exact_alpha(Hypergraph(2, 40, {}), 30), capacity_error);
  CHECK_NOTHROW(exact_alpha(Hypergraph(2, 40, {}), 40));
  CHECK_THROWS_AS(exact_alpha(Hypergraph(2, 64, {}), 64), capacity_error);
}

TEST_CASE("independent_sum") {
  CHECK(independent_sum(Hypergraph(2, 2, {})) == 3);
  CHECK(independent_sum(Hypergraph(2, 2, {{0, 1}})) == 2);
  CHECK(independent_sum(Hypergraph(3, 3, {{0, 1, 2}})) == 3);
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    auto h = rep % 2 ? oracle::random_graph(3 + rep % 9, 0.4, rng)
                     : oracle::random_linear(3, 5 + rep % 8, 20, rng);
    CHECK(independent_sum(h) == oracle::independent_sum(h));
    auto counts = independent_set_counts(h);
    CHECK(counts == oracle::independent_counts(h));
  }
}

TEST_CASE("check_hgraph_inequality") {
  auto one = check_hgraph_inequality(Hypergraph(2, 2, {{0, 1}}));
  CHECK(one.lhs == 2);
  CHECK(abs(one.rhs - HighPrecision("0.70710678118654752440")) < HighPrecision("1e-18"));
  CHECK(one.holds());

  auto triple = check_hgraph_inequality(Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(triple.lhs == 3);
  CHECK(abs(triple.rhs - 3 * pow(HighPrecision(2), HighPrecision(-4) / 3)) < HighPrecision("1e-40"));
  CHECK(triple.holds());

  auto tri = check_hgraph_inequality(Hypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(tri.lhs == 2);
  CHECK(tri.verdict == Verdict::holds);

  CHECK_THROWS_AS(check_hgraph_inequality(Hypergraph(2, 3, {})), undefined_error);
}
