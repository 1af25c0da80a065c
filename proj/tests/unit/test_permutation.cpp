#include <doctest.h>

#include <cmath>

#include "indepbound/constructions.hpp"
#include "indepbound/error.hpp"
#include "indepbound/permutation.hpp"
#include "indepbound/rng.hpp"
#include "../support/oracles.hpp"

using namespace indepbound;

TEST_CASE("ordering validation") {
  CHECK_THROWS_AS(Ordering({0, 0, 1}), input_error);
  CHECK_THROWS_AS(Ordering({0, 3, 1}), input_error);
  Ordering o({2, 0, 1});
  CHECK(o.position(2) == 0);
  CHECK(o.position(1) == 2);
}

TEST_CASE("backward_count") {
  Hypergraph edge(3, 3, {{0, 1, 2}});
  CHECK(backward_count(edge, Ordering({1, 2, 0}), 0) == 1);
  CHECK(backward_count(edge, Ordering({1, 0, 2}), 0) == 0);
  Hypergraph star(3, 5, {{0, 1, 2}, {0, 3, 4}});
  CHECK(backward_count(star, Ordering({0, 1, 2, 3, 4}), 0) == 0);
  Hypergraph tri(2, 3, {{0, 1}, {1, 2}, {0, 2}});
  auto counts = backward_counts(tri, Ordering::identity(3));
  CHECK(counts == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("p_at_most and p_zero") {
  CHECK(p_at_most(2, 1, 0) == rational(1, 3));
  CHECK(p_at_most(2, 1, 1) == rational(2, 3));
  CHECK(p_at_most(1, 1, 1) == 1);
  CHECK(p_zero(1, 2) == rational(2, 3));
  CHECK(p_zero(2, 1) == rational(1, 3));
  CHECK(p_zero(0, 4) == 1);
  for (int d = 0; d <= 8; ++d) CHECK(p_zero(d, 1) == rational(1, d + 1));
}

TEST_CASE("star distribution matches hypergraph oracle") {
  auto d12 = enumerate_star_distribution(StarConfig(1, 2));
  CHECK(d12.at(0) == rational(2, 3));
  CHECK(d12.at(1) == rational(1, 3));
  auto d21 = enumerate_star_distribution(StarConfig(2, 1));
  CHECK(d21.at(0) == rational(1, 3));
  CHECK(d21.at(2) == rational(1, 3));
  auto d11 = enumerate_star_distribution(StarConfig(1, 1));
  CHECK(d11.at(0) == rational(1, 2));

  for (int t = 1; t <= 4; ++t)
    for (int d = 0; t * d + 1 <= 8; ++d) {
      auto lib = enumerate_star_distribution(StarConfig(d, t));
      auto ref = oracle::star_backward_distribution(d, t);
      BigRational cum = 0;
      for (int a = 0; a <= d; ++a) {
        BigRational p = lib.count(a) ? lib.at(a) : BigRational(0);
        CHECK(p == ref[a]);
        cum += ref[a];
        CHECK(p_at_most(d, t, a) == cum);
      }
    }
  CHECK_THROWS_AS(enumerate_star_distribution(StarConfig(4, 3)), capacity_error);
}

TEST_CASE("q_at_least") {
  CHECK(q_at_least(2, 1, 2).value == rational(1, 3));
  CHECK(q_at_least(5, 2, 0).value == 1);
  auto q = q_at_least(3, 2, 1);
  CHECK(q.value == 1 - p_at_most(3, 2, 0));
  for (int t = 1; t <= 3; ++t)
    for (int d = 0; d <= 8; ++d)
      for (int A = 0; A <= d; ++A) CHECK(q_at_least(d, t, A).agree());
}

TEST_CASE("asymptotic_ratio against a log-gamma oracle") {
  CHECK(asymptotic_ratio(3, 1, 3) == 1);
  for (int t = 1; t <= 4; ++t)
    for (int A = 1; A <= 8; ++A)
      for (int d : {A, 50, 1000}) {
        if (d < A) continue;
        long double p = std::exp(oracle::log_p_at_most(d, t, A));
        long double shape = (1.0L / (1 + 1.0L / (t * A))) * std::pow((long double)A / d, 1.0L / t);
        double lib = asymptotic_ratio(d, t, A).convert_to<double>();
        CHECK(lib == doctest::Approx(static_cast<double>(p / shape)).epsilon(1e-9));
      }
}

TEST_CASE("select_low_backward") {
  Hypergraph edge(3, 4, {{0, 1, 2}});
  CHECK(select_low_backward(edge, Ordering({3, 2, 0, 1}), 1) == std::vector<vertex_id>{0, 2, 3});
  Hypergraph tri(2, 3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(select_low_backward(tri, Ordering::identity(3), 1) == std::vector<vertex_id>{0});
  CHECK(select_low_backward(tri, Ordering::identity(3), 3).size() == 3);
  CHECK_THROWS_AS(select_low_backward(tri, Ordering::identity(3), 0), input_error);
}

TEST_CASE("second_stage") {
  TrialRng rng(1, 0);
  CHECK(second_stage(Hypergraph(3, 4, {}), rng).size() == 4);
  auto e = second_stage(Hypergraph(3, 3, {{0, 1, 2}}), rng);
  CHECK(e.size() == 2);
  Hypergraph k4(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (int i = 0; i < 20; ++i) CHECK(second_stage(k4, rng).size() == 1);
  auto grid = i_unit(3, 2);
  for (int i = 0; i < 20; ++i) CHECK(is_independent(grid, second_stage(grid, rng)));
}

TEST_CASE("run_trials determinism and invariants") {
  auto h = i_unit(3, 1);
  auto a = run_trials(h, 1, 200, 9);
  auto b = run_trials(h, 1, 200, 9);
  CHECK(a.best_set == b.best_set);
  CHECK(a.mean_selected == b.mean_selected);
  CHECK(a.linear);
  REQUIRE(a.expected_selected);
  CHECK(*a.expected_selected == 9 * p_at_most(2, 2, 0));
  for (const auto& r : a.records) {
    CHECK(r.internal_edges == 0);
    CHECK(r.final_size == r.selected);
  }
  CHECK(is_independent(h, a.best_set));
  CHECK(a.best_set.size() == a.max_final);

  Hypergraph k3(2, 3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(run_trials(k3, 1, 10, 3).max_final == 1);
  CHECK(run_trials(Hypergraph(3, 3, {{0, 1, 2}}), 1, 10, 3).max_final == 2);
  CHECK_FALSE(run_trials(Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}}), 2, 5, 1).expected_selected);
}

TEST_CASE("TrialRng is reproducible and bounded") {
  TrialRng a(5, 2), b(5, 2), c(5, 3);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a.below(7);
    CHECK(x == b.below(7));
    CHECK(x < 7);
    differs |= x != c.below(7);
  }
  CHECK(differs);
}
