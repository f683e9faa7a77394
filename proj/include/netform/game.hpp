#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "netform/cost.hpp"
#include "netform/graph.hpp"
#include "netform/rational.hpp"

namespace netform {

/// Player i earns -penalty(degree_i - targets_i).
struct DegreeTargetGame {
  DegreeSequence targets;
  CostShape penalty;
};

/// Cournot oligopoly with inverse demand P = alpha - Q and marginal cost
/// c_i = gamma0 + costs[i](degree_i).
struct CournotGame {
  Rational alpha;
  Rational gamma0;
  std::vector<CostFunction> costs;
};

struct GameSpec {
  int n = 0;
  std::variant<DegreeTargetGame, CournotGame> kind;

  bool is_degree_target() const { return std::holds_alternative<DegreeTargetGame>(kind); }
  bool is_cournot() const { return std::holds_alternative<CournotGame>(kind); }
  const DegreeTargetGame& degree_target() const;
  const CournotGame& cournot() const;
};

GameSpec make_degree_target(DegreeSequence targets, CostShape penalty);
GameSpec make_cournot(Rational alpha, Rational gamma0, std::vector<CostFunction> costs);
/// Linear collaboration costs: every firm has c_i = gamma0 - gamma * degree_i.
GameSpec make_linear_cournot(int n, Rational alpha, Rational gamma0, Rational gamma);

/// Checks every GameSpec invariant; throws InvalidSpec (or DomainError when a
/// cost is undefined at some reachable degree).
void validate(const GameSpec& spec);

/// Per-player quantities at the Cournot equilibrium induced by a graph.
struct CournotOutcome {
  std::vector<Rational> q;  // quantities
  Rational Q;               // total output
  Rational P;               // market price alpha - Q
  std::vector<Rational> c;  // marginal costs
  std::vector<Rational> Y;  // profits q_i (P - c_i)
  bool negative_quantity = false;
};

/// A validated game with per-player cost values tabulated for every reachable degree.
/// Immutable; safe to share across threads.
class PayoffModel {
 public:
  explicit PayoffModel(GameSpec spec);

  const GameSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }

  /// Y(g) for either game family. Throws DimensionMismatch if g.n() != n().
  std::vector<Rational> payoffs(const Graph& g) const;

  /// Degree-target games: payoff of `player` at `degree`.
  const Rational& degree_payoff(Node player, int degree) const { return table_[player][degree]; }
  /// Cournot games: f_i(degree).
  const Rational& cost_at(Node player, int degree) const { return table_[player][degree]; }

 private:
  GameSpec spec_;
  std::vector<std::vector<Rational>> table_;  // [player][degree]
};

/// Y_i = -f(degree_i - k_i).
std::vector<Rational> degree_target_payoffs(const GameSpec& spec, const Graph& g);
std::vector<Rational> degree_target_payoffs(const PayoffModel& model, const Graph& g);

/// Equilibrium from the closed form q_i = (alpha - gamma0 - n f_i + sum_{j != i} f_j) / (n + 1).
CournotOutcome cournot_outcome(const GameSpec& spec, const Graph& g);
CournotOutcome cournot_outcome(const PayoffModel& model, const Graph& g);

/// Equilibrium from q_i = (alpha - gamma0 + n gamma d_i - gamma sum_{j != i} d_j) / (n + 1).
/// Requires every firm to have the same unshifted linear_decreasing cost.
CournotOutcome linear_cournot_outcome(const GameSpec& spec, const Graph& g);

/// v(g) = sum_i Y_i(g).
Rational total_value(const std::vector<Rational>& payoffs);

/// Payoffs of the two endpoints of a pair after toggling that pair, computed
/// from g's state without re-evaluating the whole game.
class DeviationProbe {
 public:
  DeviationProbe(const PayoffModel& model, const Graph& g);

  const std::vector<Rational>& payoffs() const { return base_; }
  const Graph& graph() const { return graph_; }

  /// {Y_i, Y_j} in g + ij (if absent) or g - ij (if present).
  std::pair<Rational, Rational> toggled(Node i, Node j) const;

 private:
  const PayoffModel& model_;
  Graph graph_;
  DegreeSequence degrees_;
  std::vector<Rational> base_;
  Rational cost_sum_;  // Cournot: sum_j f_j(degree_j)
};

}  // namespace netform
