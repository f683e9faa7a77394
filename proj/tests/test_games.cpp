#include <doctest.h>

#include <random>

#include "netform/errors.hpp"
#include "netform/game.hpp"
#include "oracles.hpp"

using netform::CostFunction;
using netform::DegreeSequence;
using netform::Graph;
using netform::make_rational;
using netform::Rational;

namespace {

netform::GameSpec asymmetric() {
  std::vector<CostFunction> costs;
  for (int k : {2, 3, 4, 3, 2}) costs.push_back(CostFunction::shifted_power(2, k, 2));
  return netform::make_cournot(100, 5, costs);
}

netform::GameSpec reciprocal() {
  return netform::make_cournot(30, 5, std::vector<CostFunction>(5, CostFunction::reciprocal(3)));
}

netform::GameSpec random_cournot(std::mt19937_64& rng, int n) {
  std::vector<CostFunction> costs;
  for (int i = 0; i < n; ++i) {
    switch (oracle::uniform(rng, 0, 3)) {
      case 0:
        costs.push_back(CostFunction::shifted_power(2 * oracle::uniform(rng, 1, 2), oracle::uniform(rng, 0, n - 1),
                                                    make_rational(oracle::uniform(rng, 0, 9), oracle::uniform(rng, 1, 3))));
        break;
      case 1:
        costs.push_back(CostFunction::reciprocal(make_rational(oracle::uniform(rng, 1, 9), oracle::uniform(rng, 1, 4))));
        break;
      case 2:
        costs.push_back(CostFunction::linear_decreasing(make_rational(oracle::uniform(rng, 0, 5), oracle::uniform(rng, 1, 3))));
        break;
      default: {
        const auto t = oracle::random_convex_table(rng, n - 1, oracle::uniform(rng, 0, 4));
        costs.push_back(CostFunction::table(t.values, oracle::uniform(rng, 0, n - 1)));
      }
    }
  }
  return netform::make_cournot(oracle::uniform(rng, 20, 400), oracle::uniform(rng, 0, 10), costs);
}

}  // namespace

TEST_CASE("cost shapes") {
  CHECK(CostFunction::shifted_power(2, 3, 2)(0) == 11);
  CHECK(CostFunction::shifted_power(4, 1, 0)(3) == 16);
  CHECK(CostFunction::reciprocal(3)(4) == make_rational(1, 7));
  CHECK(CostFunction::linear_decreasing(2)(3) == -6);
  CHECK(CostFunction::table({5, 1, 0, 2, 7}, 1)(0) == 1);
  CHECK_THROWS_AS(CostFunction::table({5, 1, 0, 2, 7})(3), netform::DomainError);
  CHECK_THROWS_AS(CostFunction::shifted_power(3, 0, 0), netform::InvalidSpec);
  CHECK_THROWS_AS(CostFunction::reciprocal(0), netform::InvalidSpec);
  CHECK_THROWS_AS(CostFunction::reciprocal(2)(-2), netform::DomainError);
}

TEST_CASE("asymmetric example: empty graph") {
  const auto out = netform::cournot_outcome(asymmetric(), Graph(5));
  CHECK(out.c[2] == 23);
  CHECK(out.q[2] == make_rational(13, 2));
  CHECK(out.Y[2] == make_rational(169, 4));
  CHECK_FALSE(out.negative_quantity);
}

TEST_CASE("asymmetric example: graph realizing k") {
  const Graph g = netform::realize(DegreeSequence{2, 3, 4, 3, 2});
  const auto out = netform::cournot_outcome(asymmetric(), g);
  for (int i = 0; i < 5; ++i) {
    CHECK(out.q[i] == make_rational(31, 2));
    CHECK(out.Y[i] == make_rational(961, 4));
  }
  CHECK(out.P == make_rational(45, 2));
}

TEST_CASE("reciprocal example: complete graph") {
  const auto out = netform::cournot_outcome(reciprocal(), Graph::complete(5));
  for (int i = 0; i < 5; ++i) {
    CHECK(out.q[i] == make_rational(29, 7));
    CHECK(out.Y[i] == make_rational(841, 49));
  }
}

TEST_CASE("linear example: closed form and generic path agree") {
  const auto spec = netform::make_linear_cournot(5, 100, 5, 1);
  const auto complete = netform::linear_cournot_outcome(spec, Graph::complete(5));
  CHECK(complete.q[0] == make_rational(99, 6));
  const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}});
  CHECK(netform::linear_cournot_outcome(spec, g).q[0] == make_rational(103, 6));
  CHECK(netform::linear_cournot_outcome(spec, g).q[3] == make_rational(95 - 4, 6));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::uniform(rng, 2, 9);
    const auto s = netform::make_linear_cournot(n, oracle::uniform(rng, 10, 300), oracle::uniform(rng, 0, 9),
                                                make_rational(oracle::uniform(rng, 0, 6), oracle::uniform(rng, 1, 4)));
    const Graph h = oracle::random_graph(rng, n);
    const auto a = netform::linear_cournot_outcome(s, h);
    const auto b = netform::cournot_outcome(s, h);
    CHECK(a.q == b.q);
    CHECK(a.Y == b.Y);
    CHECK(a.P == b.P);
  }
  CHECK_THROWS_AS(netform::linear_cournot_outcome(reciprocal(), Graph(5)), netform::InvalidSpec);
}

TEST_CASE("Cournot outcome matches the textbook oracle and the identity Y = q^2") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = oracle::uniform(rng, 2, 8);
    const auto spec = random_cournot(rng, n);
    const Graph g = oracle::random_graph(rng, n);
    const auto out = netform::cournot_outcome(spec, g);
    CHECK(out.Y == oracle::payoffs(spec, g));
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      CHECK(out.Y[i] == out.q[i] * out.q[i]);
      CHECK(out.P - out.c[i] == out.q[i]);
      total += out.q[i];
    }
    CHECK(out.P == spec.cournot().alpha - total);
  }
}

TEST_CASE("negative quantities are flagged, not rejected") {
  const auto spec = netform::make_cournot(
      10, 5, {CostFunction::shifted_power(2, 0, 0), CostFunction::shifted_power(2, 0, 40)});
  const auto out = netform::cournot_outcome(spec, Graph(2));
  CHECK(out.negative_quantity);
  CHECK(out.q[1] < 0);
  CHECK(out.Y[1] == out.q[1] * out.q[1]);
}

TEST_CASE("symmetric games treat relabeled players alike") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = oracle::uniform(rng, 3, 8);
    const auto spec = netform::make_cournot(
        oracle::uniform(rng, 50, 200), 3,
        std::vector<CostFunction>(static_cast<std::size_t>(n), CostFunction::reciprocal(oracle::uniform(rng, 1, 5))));
    const Graph g = oracle::random_graph(rng, n);
    const auto y = netform::cournot_outcome(spec, g).Y;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (g.degree(i) == g.degree(j)) CHECK(y[i] == y[j]);
      }
    }
  }
}

TEST_CASE("degree-target payoffs") {
  const auto spec = netform::make_degree_target(DegreeSequence{1, 1, 1, 2, 3}, netform::ShiftedPower{2, 0});
  const Graph g = netform::realize(DegreeSequence{1, 1, 1, 2, 3});
  for (const auto& y : netform::degree_target_payoffs(spec, g)) CHECK(y == 0);
  const auto empty = netform::degree_target_payoffs(spec, Graph(5));
  CHECK(empty == std::vector<Rational>{-1, -1, -1, -4, -9});

  const auto targets = netform::power_law_targets();
  const auto pl = netform::make_degree_target(targets, netform::ShiftedPower{2, 2});
  for (const auto& y : netform::degree_target_payoffs(pl, netform::realize(targets))) CHECK(y == -2);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(netform::make_degree_target(DegreeSequence{1, 5, 1}, netform::ShiftedPower{2, 0}),
                  netform::InvalidSpec);
  CHECK_THROWS_AS(netform::make_degree_target(DegreeSequence{1, 1, 1}, netform::Table{{0, 1, 0, 1, 4}}),
                  netform::InvalidSpec);
  CHECK_THROWS_AS(netform::make_degree_target(DegreeSequence{1, 1, 1}, netform::LinearDecreasing{1}),
                  netform::InvalidSpec);
  CHECK_THROWS_AS(netform::make_cournot(5, 5, std::vector<CostFunction>(3, CostFunction::reciprocal(1))),
                  netform::InvalidSpec);
  CHECK_THROWS_AS(netform::make_cournot(10, 5, std::vector<CostFunction>(4, CostFunction::table({1, 0, 1}))),
                  netform::InvalidSpec);
  CHECK_THROWS_AS(netform::cournot_outcome(reciprocal(), Graph(4)), netform::DimensionMismatch);
}

TEST_CASE("deviation probe agrees with full recomputation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::uniform(rng, 2, 7);
    const auto spec = random_cournot(rng, n);
    const netform::PayoffModel model(spec);
    const Graph g = oracle::random_graph(rng, n);
    const netform::DeviationProbe probe(model, g);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Graph h = g.has_edge(i, j) ? g.without_edge(i, j) : g.with_edge(i, j);
        const auto full = oracle::payoffs(spec, h);
        const auto [yi, yj] = probe.toggled(i, j);
        CHECK(yi == full[i]);
        CHECK(yj == full[j]);
      }
    }
  }
}
