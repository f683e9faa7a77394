#include "netform/formation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "netform/errors.hpp"
#include "netform/stability.hpp"

namespace netform {

const char* to_string(FormationVariant v) {
  return v == FormationVariant::kUniform ? "uniform" : "prefer_high_target";
}

const char* to_string(FormationOutcome o) {
  switch (o) {
    case FormationOutcome::kStable:
      return "stable";
    case FormationOutcome::kStalled:
      return "stalled";
    case FormationOutcome::kStepBudgetExhausted:
      return "step_budget_exhausted";
  }
  return "unknown";
}

std::uint64_t FormationRng::below(std::uint64_t bound) {
  // reject the low residue band so x % bound is exactly uniform
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

namespace {

std::vector<Node> partners_of(const Graph& g, const std::vector<bool>& deficient, Node v) {
  std::vector<Node> out;
  for (Node u = 0; u < g.n(); ++u) {
    if (u != v && deficient[u] && !g.has_edge(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<Node> with_max_target(const std::vector<Node>& nodes, const DegreeSequence& targets) {
  int best = -1;
  for (Node v : nodes) best = std::max(best, targets[v]);
  std::vector<Node> out;
  for (Node v : nodes) {
    if (targets[v] == best) out.push_back(v);
  }
  return out;
}

std::optional<std::pair<Node, Node>> pick_pair(const Graph& g, const DegreeSequence& targets,
                                               FormationVariant variant, FormationRng& rng) {
  const int n = g.n();
  std::vector<bool> deficient(static_cast<std::size_t>(n));
  for (Node v = 0; v < n; ++v) deficient[v] = g.degree(v) < targets[v];

  std::vector<Node> firsts;
  for (Node v = 0; v < n; ++v) {
    if (deficient[v] && !partners_of(g, deficient, v).empty()) firsts.push_back(v);
  }
  if (firsts.empty()) return std::nullopt;

  if (variant == FormationVariant::kPreferHighTarget) firsts = with_max_target(firsts, targets);
  const Node v = firsts[rng.below(firsts.size())];

  std::vector<Node> partners = partners_of(g, deficient, v);
  if (variant == FormationVariant::kPreferHighTarget) partners = with_max_target(partners, targets);
  const Node u = partners[rng.below(partners.size())];
  return std::make_pair(std::min(u, v), std::max(u, v));
}

}  // namespace

FormationResult simulate(const FormationConfig& config) {
  if (!config.spec.is_degree_target()) throw InvalidSpec("formation requires a degree-target game");
  if (config.max_steps < 1) throw InvalidSpec("max_steps must be at least 1");
  const PayoffModel model(config.spec);
  const DegreeSequence& targets = config.spec.degree_target().targets;
  FormationRng rng(config.seed);

  FormationResult result{Graph(config.spec.n), 0, FormationOutcome::kStalled, {}};
  for (;;) {
    if (result.steps >= config.max_steps) {
      result.outcome = FormationOutcome::kStepBudgetExhausted;
      return result;
    }
    const auto pair = pick_pair(result.graph, targets, config.variant, rng);
    if (!pair) {
      result.outcome = is_pairwise_stable(model, result.graph).stable ? FormationOutcome::kStable
                                                                       : FormationOutcome::kStalled;
      return result;
    }
    result.graph = result.graph.with_edge(pair->first, pair->second);
    ++result.steps;
    if (config.record_trace) result.trace.push_back(*pair);
    if (is_pairwise_stable(model, result.graph).stable) {
      result.outcome = FormationOutcome::kStable;
      return result;
    }
  }
}

EnsembleStats run_ensemble(const FormationConfig& config, int runs, int threads,
                           std::vector<FormationResult>* results) {
  if (runs < 1) throw InvalidSpec("runs must be at least 1");
  if (!config.spec.is_degree_target()) throw InvalidSpec("formation requires a degree-target game");
  const int n = config.spec.n;
  const PayoffModel model(config.spec);

  std::vector<std::optional<FormationResult>> done(static_cast<std::size_t>(runs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(1, threads)));
  auto work = [&](int worker, int stride) {
    try {
      for (int r = worker; r < runs; r += stride) {
        FormationConfig c = config;
        c.seed = config.seed + static_cast<std::uint64_t>(r);
        done[r] = simulate(c);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  const int workers = std::clamp(threads, 1, runs);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  EnsembleStats stats;
  stats.runs = runs;
  stats.mean_degree_histogram.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<double> sum(static_cast<std::size_t>(n), 0.0);
  std::vector<double> sum_sq(static_cast<std::size_t>(n), 0.0);
  const DegreeSequence& targets = config.spec.degree_target().targets;
  int successes = 0;

  for (const auto& slot : done) {
    const FormationResult& res = *slot;
    switch (res.outcome) {
      case FormationOutcome::kStable:
        ++stats.stable_runs;
        break;
      case FormationOutcome::kStalled:
        ++stats.stalled_runs;
        break;
      case FormationOutcome::kStepBudgetExhausted:
        ++stats.exhausted_runs;
        break;
    }
    const DegreeSequence eta = res.graph.degree_sequence();
    if (res.outcome == FormationOutcome::kStable && eta == targets) ++successes;
    for (int d : eta) stats.mean_degree_histogram[d] += 1.0;
    const auto y = model.payoffs(res.graph);
    for (int i = 0; i < n; ++i) {
      const double v = to_double(y[i]);
      sum[i] += v;
      sum_sq[i] += v * v;
    }
  }

  for (auto& h : stats.mean_degree_histogram) h /= runs;
  stats.per_player_mean_objective.resize(static_cast<std::size_t>(n));
  stats.per_player_objective_stddev.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double mean = sum[i] / runs;
    const double var = std::max(0.0, sum_sq[i] / runs - mean * mean);
    stats.per_player_mean_objective[i] = mean;
    stats.per_player_objective_stddev[i] = std::sqrt(var);
  }
  stats.success_rate = static_cast<double>(successes) / runs;

  if (results != nullptr) {
    results->clear();
    for (auto& slot : done) results->push_back(std::move(*slot));
  }
  return stats;
}

std::vector<double> target_degree_histogram(const DegreeSequence& targets) {
  std::vector<double> h(static_cast<std::size_t>(std::max(targets.size(), 1)), 0.0);
  for (int k : targets) {
    if (k >= static_cast<int>(h.size())) h.resize(static_cast<std::size_t>(k) + 1, 0.0);
    h[k] += 1.0;
  }
  return h;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double ta = 0.0, tb = 0.0;
  for (double x : a) ta += x;
  for (double x : b) tb += x;
  if (ta <= 0.0 || tb <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t len = std::max(a.size(), b.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double pa = i < a.size() ? a[i] / ta : 0.0;
    const double pb = i < b.size() ? b[i] / tb : 0.0;
    dist += std::abs(pa - pb);
  }
  return dist / 2.0;
}

DegreeSequence power_law_targets() {
  std::vector<int> k;
  k.insert(k.end(), 75, 1);
  k.insert(k.end(), 14, 2);
  k.insert(k.end(), 5, 3);
  k.insert(k.end(), 2, 4);
  for (int top : {5, 6, 7, 8}) k.push_back(top);
  return DegreeSequence(std::move(k));
}

}  // namespace netform
