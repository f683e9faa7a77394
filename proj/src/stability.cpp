#include "netform/stability.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "netform/errors.hpp"

namespace netform {

const char* to_string(DeviationKind kind) { return kind == DeviationKind::kDrop ? "drop" : "add"; }

StabilityReport is_pairwise_stable(const GameSpec& spec, const Graph& g) {
  return is_pairwise_stable(PayoffModel(spec), g);
}

StabilityReport is_pairwise_stable(const PayoffModel& model, const Graph& g) {
  if (g.n() != model.n()) {
    throw DimensionMismatch("game has " + std::to_string(model.n()) + " players but graph has " +
                            std::to_string(g.n()) + " nodes");
  }
  const DeviationProbe probe(model, g);
  const auto& y = probe.payoffs();
  const int n = g.n();

  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) continue;
      auto [yi, yj] = probe.toggled(i, j);
      if (yi > y[i] || yj > y[j]) {
        const Node who = yi > y[i] ? i : j;
        return {false, Deviation{DeviationKind::kDrop, {i, j}, who, {yi - y[i], yj - y[j]}}};
      }
    }
  }
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      auto [yi, yj] = probe.toggled(i, j);
      const bool i_gains = yi > y[i] && yj >= y[j];
      const bool j_gains = yj > y[j] && yi >= y[i];
      if (i_gains || j_gains) {
        return {false, Deviation{DeviationKind::kAdd, {i, j}, i_gains ? i : j, {yi - y[i], yj - y[j]}}};
      }
    }
  }
  return {true, std::nullopt};
}

StableCensus enumerate_stable(const GameSpec& spec, int threads) {
  return enumerate_stable(PayoffModel(spec), threads);
}

StableCensus enumerate_stable(const PayoffModel& model, int threads) {
  const int n = model.n();
  const auto ranges = partition_all_graphs(n, std::max(1, threads));
  std::vector<std::vector<Graph>> found(ranges.size());
  std::vector<std::exception_ptr> errors(ranges.size());

  auto work = [&](std::size_t part) {
    try {
      for (const Graph& g : ranges[part]) {
        if (is_pairwise_stable(model, g).stable) found[part].push_back(g);
      }
    } catch (...) {
      errors[part] = std::current_exception();
    }
  };

  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t p = 0; p < ranges.size(); ++p) pool.emplace_back(work, p);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  StableCensus census;
  census.n = n;
  for (const auto& r : ranges) census.graphs_examined += r.size();
  for (auto& part : found) {
    for (auto& g : part) {
      census.by_degree_sequence[g.degree_sequence()].push_back(g.code());
      census.stable.push_back(std::move(g));
    }
  }
  return census;
}

PayoffTable::PayoffTable(const PayoffModel& model) : n_(model.n()) {
  const AllGraphs all(n_);
  rows_.reserve(all.size());
  for (const Graph& g : all) rows_.push_back(model.payoffs(g));
}

namespace {

bool dominates(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

}  // namespace

ParetoResult is_pareto_optimal(const GameSpec& spec, const Graph& g) {
  const PayoffModel model(spec);
  if (g.n() != model.n()) throw DimensionMismatch("graph and game sizes differ");
  const auto mine = model.payoffs(g);
  for (const Graph& other : all_graphs(g.n())) {
    if (dominates(model.payoffs(other), mine)) return {false, other};
  }
  return {true, std::nullopt};
}

ParetoResult is_pareto_optimal(const PayoffTable& table, const Graph& g) {
  if (g.n() != table.n()) throw DimensionMismatch("graph and payoff table sizes differ");
  const auto& mine = table[g.code()];
  for (GraphCode code = 0; code < table.size(); ++code) {
    if (dominates(table[code], mine)) return {false, Graph::from_code(g.n(), code)};
  }
  return {true, std::nullopt};
}

bool has_common_shape(const GameSpec& spec) {
  const auto& costs = spec.cournot().costs;
  return std::all_of(costs.begin(), costs.end(),
                     [&](const CostFunction& c) { return c.shape() == costs.front().shape(); });
}

bool has_common_cost(const GameSpec& spec) {
  const auto& costs = spec.cournot().costs;
  return std::all_of(costs.begin(), costs.end(), [&](const CostFunction& c) { return c == costs.front(); });
}

namespace {

ConditionCheck make_check(std::string name, Rational margin, bool strict = true) {
  ConditionCheck c;
  c.name = std::move(name);
  c.strict = strict;
  c.satisfied = strict ? margin > 0 : margin >= 0;
  c.margin = std::move(margin);
  return c;
}

ConditionCheck ineq_at(const GameSpec& spec, const Graph& g, const Rational& step, std::string name) {
  const int n = spec.n;
  const CournotOutcome out = cournot_outcome(spec, g);
  const Rational ratio = make_rational(n - 1, n + 1);
  Node worst = 0;
  Rational margin = 2 * out.q[0] - ratio * step;
  for (Node i = 1; i < n; ++i) {
    Rational m = 2 * out.q[i] - ratio * step;
    if (m < margin) {
      margin = m;
      worst = i;
    }
  }
  ConditionCheck c = make_check(std::move(name), margin);
  c.details.emplace_back("worst_firm", Rational(worst));
  c.details.emplace_back("f_step", step);
  return c;
}

}  // namespace

NonnegReport check_nonneg_condition(const GameSpec& spec, const std::optional<Graph>& at) {
  const auto& game = spec.cournot();
  if (!has_common_shape(spec)) {
    throw HeterogeneousShape("the nonnegativity bound assumes every firm shares one cost shape");
  }
  const int n = spec.n;
  const CostShape& f = game.costs.front().shape();
  const bool unshifted = std::all_of(game.costs.begin(), game.costs.end(),
                                     [](const CostFunction& c) { return c.shift() == 0; });
  NonnegReport report;

  if (const auto* lin = std::get_if<LinearDecreasing>(&f); lin && unshifted) {
    const Rational penalty = lin->gamma * (n - 1) * (n - 2);
    report.bound = make_check("nonneg_linear", game.alpha - game.gamma0 - penalty);
    report.bound.details.emplace_back("alpha-gamma0", game.alpha - game.gamma0);
    report.bound.details.emplace_back("gamma(n-1)(n-2)", penalty);
  } else {
    const Rational f0 = evaluate_shape(f, 0);
    const Rational extreme = std::max(evaluate_shape(f, n - 1), evaluate_shape(f, 1 - n));
    const Rational step = std::max(evaluate_shape(f, 1) - f0, evaluate_shape(f, -1) - f0);
    const Rational margin = game.alpha - game.gamma0 - n * extreme - make_rational(n - 1, 2) * step;
    report.bound = make_check("nonneg_quantities", margin);
    report.bound.details.emplace_back("max(f(n-1),f(1-n))", extreme);
    report.bound.details.emplace_back("max(f(1)-f(0),f(-1)-f(0))", step);
    report.bound.details.emplace_back("n*max_extreme", n * extreme);
    report.bound.details.emplace_back("(n-1)/2*max_step", make_rational(n - 1, 2) * step);
  }

  if (at) {
    if (at->n() != n) throw DimensionMismatch("graph and game sizes differ");
    const Rational f0 = evaluate_shape(f, 0);
    report.ineq_plus = ineq_at(spec, *at, evaluate_shape(f, 1) - f0, "ineq_forward_step");
    report.ineq_minus = ineq_at(spec, *at, evaluate_shape(f, -1) - f0, "ineq_backward_step");
  }
  return report;
}

std::vector<ConditionCheck> check_complete_graph_conditions(const GameSpec& spec) {
  const auto& game = spec.cournot();
  if (!has_common_cost(spec)) {
    throw HeterogeneousShape("the complete-graph conditions assume every firm has the same cost function");
  }
  const int n = spec.n;
  const CostFunction& cost = game.costs.front();
  std::vector<Rational> f;
  for (int k = 0; k < n; ++k) f.push_back(cost(k));

  std::vector<ConditionCheck> checks;

  {
    Rational margin = f[0] - f[1];
    int at = 0;
    for (int k = 1; k + 1 < n; ++k) {
      if (f[k] - f[k + 1] < margin) {
        margin = f[k] - f[k + 1];
        at = k;
      }
    }
    auto c = make_check("decreasing", margin);
    c.details.emplace_back("min_at_k", Rational(at));
    checks.push_back(std::move(c));
  }
  {
    // second differences on interior integer points; vacuous for n = 2
    Rational margin = 0;
    int at = -1;
    for (int k = 1; k + 1 < n; ++k) {
      Rational second = f[k - 1] - 2 * f[k] + f[k + 1];
      if (at < 0 || second < margin) {
        margin = second;
        at = k;
      }
    }
    auto c = make_check("convex", margin, /*strict=*/false);
    if (at >= 0) c.details.emplace_back("min_at_k", Rational(at));
    checks.push_back(std::move(c));
  }
  {
    auto it = std::min_element(f.begin(), f.end());
    auto c = make_check("positive", *it);
    c.details.emplace_back("min_at_k", Rational(static_cast<int>(it - f.begin())));
    checks.push_back(std::move(c));
  }
  {
    auto c = make_check("alpha_minus_gamma0_exceeds_n_f0", game.alpha - game.gamma0 - n * f[0]);
    c.details.emplace_back("alpha-gamma0", game.alpha - game.gamma0);
    c.details.emplace_back("n*f(0)", n * f[0]);
    checks.push_back(std::move(c));
  }
  {
    std::optional<Rational> f_n;
    try {
      f_n = cost(n);
    } catch (const DomainError&) {
    }
    if (!f_n) {
      ConditionCheck c;
      c.name = "not_too_steep";
      c.satisfied = false;
      c.margin = 0;
      c.details.emplace_back("undefined_f_at", Rational(n));
      checks.push_back(std::move(c));
    } else {
      std::vector<Rational> diff;
      for (int k = 0; k < n; ++k) diff.push_back((k + 1 < n ? f[k + 1] : *f_n) - f[k]);
      Rational lo = diff[0] - n * diff[0], hi = lo;
      int lo1 = 0, lo2 = 0, hi1 = 0, hi2 = 0;
      for (int k1 = 0; k1 < n; ++k1) {
        for (int k2 = 0; k2 < n; ++k2) {
          Rational v = diff[k1] - n * diff[k2];
          if (v < lo) {
            lo = v;
            lo1 = k1;
            lo2 = k2;
          }
          if (v > hi) {
            hi = v;
            hi1 = k1;
            hi2 = k2;
          }
        }
      }
      auto c = make_check("not_too_steep", lo);
      c.details.emplace_back("min_k1", Rational(lo1));
      c.details.emplace_back("min_k2", Rational(lo2));
      c.details.emplace_back("max_value", hi);
      c.details.emplace_back("max_k1", Rational(hi1));
      c.details.emplace_back("max_k2", Rational(hi2));
      checks.push_back(std::move(c));
    }
  }
  return checks;
}

DeltaAnalysis target_deviation_analysis(const GameSpec& spec, const Graph& g, std::pair<Node, Node> link) {
  const auto& game = spec.cournot();
  if (!has_common_shape(spec)) {
    throw HeterogeneousShape("the closed-form payoff change assumes every firm shares one cost shape");
  }
  if (g.n() != spec.n) throw DimensionMismatch("graph and game sizes differ");
  for (Node i = 0; i < g.n(); ++i) {
    if (g.degree(i) != game.costs[i].shift()) {
      throw NotRealizingTarget("node " + std::to_string(i) + " has degree " + std::to_string(g.degree(i)) +
                               " but target " + std::to_string(game.costs[i].shift()));
    }
  }
  auto [a, b] = link;
  if (a > b) std::swap(a, b);
  const bool present = g.has_edge(a, b);
  const CostShape& f = game.costs.front().shape();
  const int n = spec.n;

  DeltaAnalysis out;
  out.kind = present ? DeviationKind::kDrop : DeviationKind::kAdd;
  out.link = {a, b};
  out.delta_f = evaluate_shape(f, present ? -1 : 1) - evaluate_shape(f, 0);

  const Graph moved = present ? g.without_edge(a, b) : g.with_edge(a, b);
  const CournotOutcome before = cournot_outcome(spec, g);
  const CournotOutcome after = cournot_outcome(spec, moved);
  const Rational ratio = make_rational(n - 1, n + 1);
  const Node players[2] = {a, b};
  for (int s = 0; s < 2; ++s) {
    const Node p = players[s];
    EndpointDelta e{p, before.q[p], -out.delta_f * ratio * (2 * before.q[p] - ratio * out.delta_f),
                    after.Y[p] - before.Y[p]};
    out.endpoints[s] = std::move(e);
  }
  return out;
}

}  // namespace netform
