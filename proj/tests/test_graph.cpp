#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "netform/errors.hpp"
#include "netform/graph.hpp"
#include "oracles.hpp"

using netform::DegreeSequence;
using netform::Graph;

TEST_CASE("with_edge and without_edge report distinct errors") {
  const Graph g = Graph(4).with_edge(0, 1);
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS((void)g.with_edge(1, 0), netform::EdgeAlreadyPresent);
  CHECK_THROWS_AS((void)g.without_edge(2, 3), netform::EdgeAbsent);
  CHECK_THROWS_AS((void)g.with_edge(0, 4), netform::NodeOutOfRange);
  CHECK_THROWS_AS((void)g.with_edge(2, 2), netform::NodeOutOfRange);
  CHECK_THROWS_AS(Graph(1), netform::NodeOutOfRange);
  CHECK_THROWS_AS(Graph(netform::kMaxNodes + 1), netform::NodeOutOfRange);
  CHECK(g.without_edge(0, 1) == Graph(4));
}

TEST_CASE("degree sequence of a path with a chord") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(g.degree_sequence() == DegreeSequence{1, 2, 3, 2, 2});
  CHECK(g.edge_count() == 5);
  CHECK(Graph::complete(6).degree_sequence() == DegreeSequence{5, 5, 5, 5, 5, 5});
}

TEST_CASE("pair ranks enumerate pairs in canonical order") {
  for (int n = 2; n <= 9; ++n) {
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++rank) {
        CHECK(netform::pair_rank(n, i, j) == rank);
        CHECK(netform::pair_at(n, rank) == std::pair{i, j});
      }
    }
    CHECK(rank == netform::pair_count(n));
  }
}

TEST_CASE("codes round-trip and edge bits follow pair rank") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::uniform(rng, 2, 11);
    const Graph g = oracle::random_graph(rng, n);
    CHECK(Graph::from_code(n, g.code()) == g);
    CHECK(Graph::from_code_string(n, g.code_string()) == g);
    CHECK(g.degree_sequence().values() == oracle::degrees_from_code(n, g.code()));
  }
  const Graph big = Graph::complete(40);
  CHECK(Graph::from_code_string(40, big.code_string()) == big);
  CHECK_THROWS_AS(big.code(), netform::EnumerationTooLarge);
}

TEST_CASE("eg_check agrees with attained sequences for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const auto attained = oracle::attained_sequences(n);
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    while (true) {
      CAPTURE(n);
      CHECK(netform::eg_check(DegreeSequence(d)) == (attained.count(d) > 0));
      int pos = 0;
      while (pos < n && ++d[pos] > n - 1) d[pos++] = 0;
      if (pos == n) break;
    }
  }
}

TEST_CASE("eg_check rejects negative and oversized entries") {
  CHECK_FALSE(netform::eg_check(DegreeSequence{-1, 1}));
  CHECK_FALSE(netform::eg_check(DegreeSequence{3, 1, 1}));
  CHECK_FALSE(netform::eg_check(DegreeSequence{1, 1, 1}));
  CHECK(netform::eg_check(DegreeSequence{0, 0, 0}));
}

TEST_CASE("realize builds the requested degree sequence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = oracle::uniform(rng, 2, 30);
    const DegreeSequence d = oracle::random_graphical(rng, n, std::uniform_real_distribution<>(0.05, 0.9)(rng));
    CHECK(netform::realize(d).degree_sequence() == d);
  }
  CHECK(netform::realize(DegreeSequence{0, 0, 0}) == Graph(3));
  CHECK(netform::realize(netform::DegreeSequence{1, 1, 1, 2, 3}) ==
        Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 3}, {3, 4}}));
  CHECK_THROWS_AS(netform::realize(DegreeSequence{1, 1, 1}), netform::NotGraphical);
}

TEST_CASE("all_graphs visits every code once in increasing order") {
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t expected = 0;
    for (const Graph& g : netform::all_graphs(n)) {
      CHECK(g.code() == expected);
      ++expected;
    }
    CHECK(expected == (std::uint64_t{1} << netform::pair_count(n)));
  }
}

TEST_CASE("partitions tile the code space") {
  for (int parts : {1, 2, 3, 7, 100}) {
    std::uint64_t next = 0;
    for (const auto& range : netform::partition_all_graphs(5, parts)) {
      if (range.size() > 0) CHECK((*range.begin()).code() == next);
      next += range.size();
    }
    CHECK(next == 1024);
  }
}

TEST_CASE("enumeration cap") {
  CHECK(netform::enumeration_edge_cap() <= netform::kMaxEnumerationEdges);
  CHECK_NOTHROW(netform::require_enumerable(7));
  CHECK_THROWS_AS(netform::require_enumerable(9), netform::EnumerationTooLarge);
  CHECK_THROWS_AS(netform::all_graphs(9), netform::EnumerationTooLarge);
}
