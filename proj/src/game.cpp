#include "netform/game.hpp"

#include <string>

#include "netform/errors.hpp"

namespace netform {

const DegreeTargetGame& GameSpec::degree_target() const {
  if (const auto* g = std::get_if<DegreeTargetGame>(&kind)) return *g;
  throw InvalidSpec("expected a degree-target game");
}

const CournotGame& GameSpec::cournot() const {
  if (const auto* g = std::get_if<CournotGame>(&kind)) return *g;
  throw InvalidSpec("expected a Cournot game");
}

GameSpec make_degree_target(DegreeSequence targets, CostShape penalty) {
  GameSpec spec;
  spec.n = targets.size();
  spec.kind = DegreeTargetGame{std::move(targets), std::move(penalty)};
  validate(spec);
  return spec;
}

GameSpec make_cournot(Rational alpha, Rational gamma0, std::vector<CostFunction> costs) {
  GameSpec spec;
  spec.n = static_cast<int>(costs.size());
  spec.kind = CournotGame{std::move(alpha), std::move(gamma0), std::move(costs)};
  validate(spec);
  return spec;
}

GameSpec make_linear_cournot(int n, Rational alpha, Rational gamma0, Rational gamma) {
  std::vector<CostFunction> costs(static_cast<std::size_t>(std::max(n, 0)), CostFunction::linear_decreasing(gamma));
  return make_cournot(std::move(alpha), std::move(gamma0), std::move(costs));
}

namespace {

void require_table_radius(const CostShape& shape, int n, const std::string& what) {
  if (const auto* t = std::get_if<Table>(&shape); t && t->radius() < n - 1) {
    throw InvalidSpec(what + ": table must cover [-(n-1), n-1], i.e. " + std::to_string(2 * n - 1) + " values");
  }
}

}  // namespace

void validate(const GameSpec& spec) {
  if (spec.n < kMinNodes || spec.n > kMaxNodes) {
    throw InvalidSpec("player count " + std::to_string(spec.n) + " outside [2, " + std::to_string(kMaxNodes) + "]");
  }
  const int n = spec.n;
  if (const auto* dt = std::get_if<DegreeTargetGame>(&spec.kind)) {
    if (dt->targets.size() != n) throw InvalidSpec("targets length differs from n");
    for (int k : dt->targets) {
      if (k < 0 || k > n - 1) throw InvalidSpec("target degree " + std::to_string(k) + " outside [0, n-1]");
    }
    validate_shape(dt->penalty);
    require_table_radius(dt->penalty, n, "penalty");
    // convex on the integer domain with its minimum at 0
    const Rational at0 = evaluate_shape(dt->penalty, 0);
    for (int x = -(n - 1); x <= n - 1; ++x) {
      const Rational fx = evaluate_shape(dt->penalty, x);
      if (fx < at0) throw InvalidSpec("penalty minimum is not at 0 (f(" + std::to_string(x) + ") < f(0))");
      if (x > -(n - 1) && x < n - 1) {
        const Rational second = evaluate_shape(dt->penalty, x - 1) - 2 * fx + evaluate_shape(dt->penalty, x + 1);
        if (second < 0) throw InvalidSpec("penalty is not convex at x=" + std::to_string(x));
      }
    }
    return;
  }
  const auto& c = std::get<CournotGame>(spec.kind);
  if (static_cast<int>(c.costs.size()) != n) throw InvalidSpec("number of cost functions differs from n");
  if (!(c.alpha > c.gamma0)) throw InvalidSpec("Cournot game requires alpha > gamma0");
  for (int i = 0; i < n; ++i) {
    require_table_radius(c.costs[i].shape(), n, "cost of firm " + std::to_string(i));
    for (int d = 0; d < n; ++d) (void)c.costs[i](d);
  }
}

PayoffModel::PayoffModel(GameSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  const int n = spec_.n;
  table_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  if (const auto* dt = std::get_if<DegreeTargetGame>(&spec_.kind)) {
    for (int i = 0; i < n; ++i) {
      for (int d = 0; d < n; ++d) table_[i][d] = -evaluate_shape(dt->penalty, d - dt->targets[i]);
    }
  } else {
    const auto& c = std::get<CournotGame>(spec_.kind);
    for (int i = 0; i < n; ++i) {
      for (int d = 0; d < n; ++d) table_[i][d] = c.costs[i](d);
    }
  }
}

std::vector<Rational> PayoffModel::payoffs(const Graph& g) const {
  if (spec_.is_degree_target()) return degree_target_payoffs(*this, g);
  return cournot_outcome(*this, g).Y;
}

namespace {

void require_dimension(int expected, const Graph& g) {
  if (g.n() != expected) {
    throw DimensionMismatch("game has " + std::to_string(expected) + " players but graph has " +
                            std::to_string(g.n()) + " nodes");
  }
}

CournotOutcome finish_outcome(const CournotGame& game, std::vector<Rational> q, std::vector<Rational> c) {
  CournotOutcome out;
  out.Q = 0;
  for (const auto& qi : q) {
    out.Q += qi;
    if (qi < 0) out.negative_quantity = true;
  }
  out.P = game.alpha - out.Q;
  out.Y.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out.Y.push_back(q[i] * (out.P - c[i]));
  out.q = std::move(q);
  out.c = std::move(c);
  return out;
}

}  // namespace

std::vector<Rational> degree_target_payoffs(const GameSpec& spec, const Graph& g) {
  return degree_target_payoffs(PayoffModel(spec), g);
}

std::vector<Rational> degree_target_payoffs(const PayoffModel& model, const Graph& g) {
  (void)model.spec().degree_target();
  require_dimension(model.n(), g);
  std::vector<Rational> y;
  y.reserve(static_cast<std::size_t>(g.n()));
  for (Node i = 0; i < g.n(); ++i) y.push_back(model.degree_payoff(i, g.degree(i)));
  return y;
}

CournotOutcome cournot_outcome(const GameSpec& spec, const Graph& g) { return cournot_outcome(PayoffModel(spec), g); }

CournotOutcome cournot_outcome(const PayoffModel& model, const Graph& g) {
  const auto& game = model.spec().cournot();
  require_dimension(model.n(), g);
  const int n = model.n();
  const DegreeSequence eta = g.degree_sequence();
  std::vector<Rational> f(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f[i] = model.cost_at(i, eta[i]);

  const Rational base = game.alpha - game.gamma0;
  std::vector<Rational> q(static_cast<std::size_t>(n));
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rational others = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) others += f[j];
    }
    q[i] = (base - n * f[i] + others) / (n + 1);
    c[i] = game.gamma0 + f[i];
  }
  return finish_outcome(game, std::move(q), std::move(c));
}

CournotOutcome linear_cournot_outcome(const GameSpec& spec, const Graph& g) {
  const auto& game = spec.cournot();
  require_dimension(spec.n, g);
  const int n = spec.n;
  const auto* first = std::get_if<LinearDecreasing>(&game.costs.front().shape());
  if (first == nullptr) throw InvalidSpec("linear_cournot_outcome needs linear_decreasing costs");
  for (const auto& cf : game.costs) {
    const auto* lin = std::get_if<LinearDecreasing>(&cf.shape());
    if (lin == nullptr || cf.shift() != 0 || lin->gamma != first->gamma) {
      throw InvalidSpec("linear_cournot_outcome needs one common unshifted linear_decreasing cost");
    }
  }
  const Rational& gamma = first->gamma;
  const DegreeSequence eta = g.degree_sequence();

  std::vector<Rational> q(static_cast<std::size_t>(n));
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long others = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) others += eta[j];
    }
    q[i] = (game.alpha - game.gamma0 + n * gamma * eta[i] - gamma * others) / (n + 1);
    c[i] = game.gamma0 - gamma * eta[i];
  }
  return finish_outcome(game, std::move(q), std::move(c));
}

Rational total_value(const std::vector<Rational>& payoffs) {
  Rational v = 0;
  for (const auto& y : payoffs) v += y;
  return v;
}

DeviationProbe::DeviationProbe(const PayoffModel& model, const Graph& g)
    : model_(model), graph_(g), degrees_(g.degree_sequence()), base_(model.payoffs(g)), cost_sum_(0) {
  if (model.spec().is_cournot()) {
    for (Node i = 0; i < g.n(); ++i) cost_sum_ += model.cost_at(i, degrees_[i]);
  }
}

std::pair<Rational, Rational> DeviationProbe::toggled(Node i, Node j) const {
  const int step = graph_.has_edge(i, j) ? -1 : 1;
  const int di = degrees_[i] + step;
  const int dj = degrees_[j] + step;
  if (model_.spec().is_degree_target()) {
    return {model_.degree_payoff(i, di), model_.degree_payoff(j, dj)};
  }
  // Only f_i and f_j move; everything else follows from the closed form.
  const auto& game = model_.spec().cournot();
  const int n = model_.n();
  const Rational& fi = model_.cost_at(i, di);
  const Rational& fj = model_.cost_at(j, dj);
  const Rational sum = cost_sum_ - model_.cost_at(i, degrees_[i]) - model_.cost_at(j, degrees_[j]) + fi + fj;
  const Rational base = game.alpha - game.gamma0;
  const Rational total = (n * base - sum) / (n + 1);
  const Rational price = game.alpha - total;
  const Rational qi = (base - (n + 1) * fi + sum) / (n + 1);
  const Rational qj = (base - (n + 1) * fj + sum) / (n + 1);
  return {qi * (price - game.gamma0 - fi), qj * (price - game.gamma0 - fj)};
}

}  // namespace netform
