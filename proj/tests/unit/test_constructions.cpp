#include <doctest.h>

#include <set>

#include "indepbound/bounds.hpp"
#include "indepbound/constructions.hpp"
#include "indepbound/error.hpp"

using namespace indepbound;

TEST_CASE("bipartite_tower") {
  auto one = bipartite_tower(1);
  CHECK(one.n() == 2);
  CHECK(one.m() == 1);
  auto three = bipartite_tower(3);
  CHECK(three.n() == 14);
  CHECK(three.average_degree() == 3);
  auto four = bipartite_tower(4);
  CHECK(four.n() == 30);
  CHECK(four.average_degree() == rational(17, 3));
  for (std::size_t n = 1; n <= 9; ++n) {
    auto h = bipartite_tower(n);
    std::size_t streamed = 0;
    for_each_bipartite_tower_edge(n, [&](vertex_id, vertex_id) { ++streamed; });
    CHECK(streamed == h.m());
    CHECK(h.average_degree() == rational((1 << n) + 1, 3));
  }
  CHECK_THROWS_AS(bipartite_tower(0), input_error);
  CHECK_THROWS_AS(bipartite_tower(12, 1000), capacity_error);
}

TEST_CASE("i_unit") {
  auto u0 = i_unit(3, 0);
  CHECK(u0.n() == 3);
  CHECK(u0.m() == 1);
  auto u1 = i_unit(3, 1);
  CHECK(u1.n() == 9);
  CHECK(u1.m() == 6);
  CHECK(is_linear(u1));
  auto u22 = i_unit(2, 2);
  CHECK(u22.n() == 16);
  CHECK(u22.m() == 32);
  for (vertex_id v = 0; v < u22.n(); ++v) CHECK(u22.degree(v) == 4);
  // vertex (c0, c1) = c0 + 3 c1: the row line through 0 is {0, 1, 2}
  auto row = u1.edge(0);
  CHECK(std::vector<vertex_id>(row.begin(), row.end()) == std::vector<vertex_id>{0, 1, 2});
  CHECK_THROWS_AS(i_unit(3, 5), capacity_error);
  CHECK_THROWS_AS(i_unit(1, 1), input_error);
}

TEST_CASE("family_H") {
  auto h1 = family_H(1, 3, 1);
  CHECK(h1.n() == 9);
  CHECK(h1.m() == 3);
  auto h2 = family_H(2, 2, 1);
  CHECK(h2.n() == 8 * 2 + 4 * 4);
  CHECK(h2.m() == 8 + 4 * 4);
  CHECK(is_linear(h2));
  // exact average degree from the component counts
  auto h = family_H(2, 3, 1);
  CHECK(h.n() == 27 * 3 + 9 * 9);
  CHECK(h.average_degree() == BigRational(27 * 3 * 1 + 9 * 9 * 2, 162));
  CHECK(is_linear(h));
  CHECK_THROWS_AS(family_H(6, 3, 1), capacity_error);
}

TEST_CASE("matched_biclique") {
  auto six = matched_biclique(6);
  CHECK(six.n() == 6);
  CHECK(six.m() == 6);
  CHECK(check_family(six, BoundFamily::triangle()));
  auto nine = matched_biclique(9);
  CHECK(nine.average_degree() == rational(8, 3));
  for (std::size_t n = 3; n <= 45; n += 3) CHECK(check_family(matched_biclique(n), BoundFamily::triangle()));
  CHECK_THROWS_AS(matched_biclique(7), input_error);
  CHECK_THROWS_AS(matched_biclique(0), input_error);
}

TEST_CASE("build_family") {
  CHECK(FamilySpec::parse_kind("family-H") == FamilySpec::family_H);
  CHECK(FamilySpec::kind_name(FamilySpec::matched_biclique) == "matched-biclique");
  CHECK_THROWS_AS(FamilySpec::parse_kind("nope"), input_error);
  FamilySpec spec;
  spec.family = FamilySpec::i_unit;
  spec.k = 4;
  spec.i = 1;
  CHECK(build_family(spec).n() == 16);
}

TEST_CASE("disjoint_union") {
  auto u = disjoint_union({Hypergraph(2, 2, {{0, 1}}), Hypergraph(2, 3, {{1, 2}})});
  CHECK(u.n() == 5);
  CHECK(u.edge_list() == std::vector<std::vector<vertex_id>>{{0, 1}, {3, 4}});
  CHECK_THROWS_AS(disjoint_union({Hypergraph(2, 2, {}), Hypergraph(3, 3, {})}), input_error);
}
