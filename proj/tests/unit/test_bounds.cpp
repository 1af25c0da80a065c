#include <doctest.h>

#include "indepbound/bounds.hpp"
#include "indepbound/constructions.hpp"
#include "indepbound/error.hpp"
#include "indepbound/independence.hpp"
#include "../support/oracles.hpp"

using namespace indepbound;

namespace {
const HighPrecision tol("1e-28");
Hypergraph complete(std::size_t n) {
  std::vector<std::vector<vertex_id>> e;
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v) e.push_back({u, v});
  return Hypergraph(2, n, e);
}
Hypergraph cycle(std::size_t n) {
  std::vector<std::vector<vertex_id>> e;
  for (vertex_id u = 0; u < n; ++u) e.push_back({u, static_cast<vertex_id>((u + 1) % n)});
  return Hypergraph(2, n, e);
}
}  // namespace

TEST_CASE("caro_wei") {
  CHECK(caro_wei(complete(3)) == 1);
  CHECK(caro_wei(Hypergraph(2, 5, {})) == 5);
  Hypergraph star(2, 4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(caro_wei(star) == rational(7, 4));
  CHECK(caro_wei(star) <= exact_alpha(star));
  CHECK_THROWS_AS(caro_wei(Hypergraph(3, 3, {{0, 1, 2}})), input_error);
}

TEST_CASE("caro_tuza") {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    auto g = oracle::random_graph(8, 0.4, rng);
    CHECK(caro_tuza(g) == caro_wei(g));
  }
  CHECK(caro_tuza(Hypergraph(3, 3, {{0, 1, 2}})) == 2);
  CHECK(caro_tuza(i_unit(3, 1)) == rational(24, 5));
  CHECK(caro_tuza(i_unit(3, 1)) <= exact_alpha(i_unit(3, 1)));
}

TEST_CASE("caro_tuza_simplified") {
  auto g = cycle(7);
  CHECK(abs(caro_tuza_simplified(g, 1) - to_high_precision(caro_wei(g))) < tol);
  auto edge = caro_tuza_simplified(Hypergraph(3, 3, {{0, 1, 2}}), 1);
  CHECK(abs(edge - 3 / sqrt(HighPrecision(2))) < tol);
  CHECK(abs(caro_tuza_simplified(Hypergraph(4, 6, {}), HighPrecision("0.5")) - 3) < tol);
}

TEST_CASE("degree_sequence_bound") {
  auto g = cycle(8);
  auto seq = degree_sequence_bound(g, 0, 1, BoundFamily::triangle());
  CHECK(abs(seq - log(HighPrecision(2)) * 8 / 2) < tol);

  auto tower = bipartite_tower(3);
  auto t3 = degree_sequence_bound(tower, rational(1, 2), 1, BoundFamily::triangle());
  auto expected = log(HighPrecision(3)) * (2 / sqrt(HighPrecision(3)) + 2 + 2);
  CHECK(abs(t3 - expected) < tol);
  CHECK(abs(t3 - HighPrecision("5.663")) < HighPrecision("0.001"));

  auto grid = i_unit(3, 2);  // 4-regular, k = 3
  auto lin = degree_sequence_bound(grid, 0, 1, BoundFamily::linear_uniform());
  CHECK(abs(lin - sqrt(log(HighPrecision(4))) * 81 / 2) < tol);

  CHECK_THROWS_AS(degree_sequence_bound(Hypergraph(2, 2, {{0, 1}}), 0, 1, BoundFamily::triangle()),
                  undefined_error);
  CHECK_THROWS_AS(degree_sequence_bound(cycle(5), rational(1, 2), 1, BoundFamily::clique_free(4)),
                  undefined_error);
  CHECK_THROWS_AS(degree_sequence_bound(cycle(5), 1, 1, BoundFamily::triangle()), input_error);
}

TEST_CASE("regular inputs give ratio one") {
  for (auto h : {cycle(9), i_unit(2, 2), complete(6)}) {
    auto fam = BoundFamily::triangle();
    auto r = degree_sequence_bound(h, rational(1, 2), 1, fam) / average_degree_bound(h, 1, fam);
    CHECK(abs(r - 1) < tol);
  }
  auto grid = i_unit(3, 2);
  auto fam = BoundFamily::linear_uniform();
  auto r = degree_sequence_bound(grid, rational(1, 3), 1, fam) / average_degree_bound(grid, 1, fam);
  CHECK(abs(r - 1) < tol);
}

TEST_CASE("spencer_bound") {
  auto matching = Hypergraph(2, 4, {{0, 1}, {2, 3}});
  CHECK(abs(spencer_bound(matching, 1).value - 4) < tol);
  CHECK(abs(spencer_bound(Hypergraph(3, 3, {{0, 1, 2}}), 2).value - 6) < tol);
  CHECK(abs(spencer_bound(i_unit(3, 1), 1).value - 9 / sqrt(HighPrecision(2))) < tol);
  auto empty = spencer_bound(Hypergraph(3, 5, {}), 1);
  CHECK(empty.edgeless);
  CHECK(empty.value == 5);
}

TEST_CASE("check_family") {
  CHECK_FALSE(check_family(complete(4), BoundFamily::clique_free(4)));
  CHECK(check_family(complete(4), BoundFamily::clique_free(5)));
  CHECK_FALSE(check_family(complete(3), BoundFamily::triangle()));
  CHECK(check_family(cycle(6), BoundFamily::triangle()));
  CHECK(check_family(cycle(7), BoundFamily::triangle()));
  CHECK(check_family(bipartite_tower(5), BoundFamily::triangle()));
  CHECK(check_family(i_unit(4, 1), BoundFamily::linear_uniform()));
  CHECK_THROWS_AS(check_family(complete(4), BoundFamily::clique_free(7)), capacity_error);
}

TEST_CASE("threshold_from_epsilon") {
  CHECK(threshold_from_epsilon(bipartite_tower(3), rational(1, 2)) == 2);
  CHECK(threshold_from_epsilon(i_unit(3, 2), 0) == 1);
  CHECK(threshold_from_epsilon(Hypergraph(2, 3, {}), rational(1, 2)) == 1);
}

TEST_CASE("compare_bounds report") {
  CompareOptions opt;
  opt.trials = 20;
  auto rep = compare_bounds(bipartite_tower(3), opt);
  CHECK(rep.exact_alpha == std::size_t{7});
  CHECK(rep.A == 2);
  CHECK(rep.heuristic_alpha <= 7);
  bool has_ratio = false;
  for (const auto& r : rep.ratios) has_ratio |= r.family == "triangle-free";
  CHECK(has_ratio);
  for (const auto& b : rep.bounds)
    if (b.name == "caro_tuza") CHECK(b.label == "exact");

  opt.A = 3;
  auto forced = compare_bounds(bipartite_tower(3), opt);
  CHECK(forced.A == 3);
  CHECK(forced.A_source.find("overrides") != std::string::npos);
}
