#pragma once

// Test-only reference computations. Nothing here goes through PayoffModel,
// DeviationProbe or the Erdős–Gallai / Havel–Hakimi code they check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "netform/netform.hpp"

namespace oracle {

using netform::Graph;
using netform::Rational;

/// Degrees straight from the code bits, in canonical pair order.
inline std::vector<int> degrees_from_code(int n, std::uint64_t code) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) {
        ++d[i];
        ++d[j];
      }
    }
  }
  return d;
}

/// Every degree sequence attained by some labeled graph on n nodes.
inline std::set<std::vector<int>> attained_sequences(int n) {
  std::set<std::vector<int>> out;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t code = 0; code < total; ++code) out.insert(degrees_from_code(n, code));
  return out;
}

/// Payoffs computed from the spec by the textbook formulas: Y_i = -f(deg_i - k_i),
/// or the Cournot equilibrium q_i, P = alpha - Q, Y_i = q_i (P - c_i).
inline std::vector<Rational> payoffs(const netform::GameSpec& spec, const Graph& g) {
  const int n = spec.n;
  std::vector<Rational> y(static_cast<std::size_t>(n));
  if (spec.is_degree_target()) {
    const auto& dt = spec.degree_target();
    for (int i = 0; i < n; ++i) y[i] = -netform::evaluate_shape(dt.penalty, g.degree(i) - dt.targets[i]);
    return y;
  }
  const auto& c = spec.cournot();
  std::vector<Rational> f(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f[i] = c.costs[i](g.degree(i));
  std::vector<Rational> q(static_cast<std::size_t>(n));
  Rational total = 0;
  for (int i = 0; i < n; ++i) {
    Rational num = c.alpha - c.gamma0 - n * f[i];
    for (int j = 0; j < n; ++j) {
      if (j != i) num += f[j];
    }
    q[i] = num / (n + 1);
    total += q[i];
  }
  const Rational price = c.alpha - total;
  for (int i = 0; i < n; ++i) y[i] = q[i] * (price - (c.gamma0 + f[i]));
  return y;
}

/// Pairwise stability read straight off the two clauses of the definition,
/// evaluating both orientations of every pair on fully recomputed payoffs.
inline bool pairwise_stable(const netform::GameSpec& spec, const Graph& g) {
  const auto y = payoffs(spec, g);
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.has_edge(i, j)) {
        const auto y2 = payoffs(spec, g.without_edge(i, j));
        if (!(y[i] >= y2[i])) return false;
      } else {
        const auto y2 = payoffs(spec, g.with_edge(i, j));
        if (y2[i] > y[i] && !(y2[j] < y[j])) return false;
      }
    }
  }
  return true;
}

/// Degree-preserving double edge swap; returns g unchanged when the swap is not simple.
inline Graph random_swap(const Graph& g, std::mt19937_64& rng) {
  auto edges = g.edges();
  if (edges.size() < 2) return g;
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  auto [a, b] = edges[pick(rng)];
  auto [c, d] = edges[pick(rng)];
  if (rng() & 1U) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return g;
  if (g.has_edge(a, c) || g.has_edge(b, d)) return g;
  return g.without_edge(a, b).without_edge(std::min(c, d), std::max(c, d)).with_edge(a, c).with_edge(b, d);
}

/// Uniform integer in [lo, hi].
inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// A random graphical sequence on n nodes: degrees of a random graph.
inline netform::DegreeSequence random_graphical(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g = g.with_edge(i, j);
    }
  }
  return g.degree_sequence();
}

inline Graph random_graph(std::mt19937_64& rng, int n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g = g.with_edge(i, j);
    }
  }
  return g;
}

/// Convex table on [-radius, radius] with minimum psi at 0 and strictly positive steps away from 0.
inline netform::Table random_convex_table(std::mt19937_64& rng, int radius, const Rational& psi) {
  std::vector<Rational> right(static_cast<std::size_t>(radius) + 1), left(static_cast<std::size_t>(radius) + 1);
  right[0] = left[0] = psi;
  Rational step_r = netform::make_rational(uniform(rng, 1, 8), uniform(rng, 1, 4));
  Rational step_l = netform::make_rational(uniform(rng, 1, 8), uniform(rng, 1, 4));
  for (int x = 1; x <= radius; ++x) {
    right[x] = right[x - 1] + step_r;
    left[x] = left[x - 1] + step_l;
    step_r += netform::make_rational(uniform(rng, 0, 6), uniform(rng, 1, 3));
    step_l += netform::make_rational(uniform(rng, 0, 6), uniform(rng, 1, 3));
  }
  netform::Table t;
  for (int x = -radius; x <= radius; ++x) t.values.push_back(x < 0 ? left[-x] : right[x]);
  return t;
}

}  // namespace oracle
