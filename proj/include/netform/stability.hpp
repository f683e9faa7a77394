#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netform/game.hpp"
#include "netform/graph.hpp"
#include "netform/rational.hpp"

namespace netform {

enum class DeviationKind { kDrop, kAdd };

const char* to_string(DeviationKind kind);

/// A deviation that breaks pairwise stability.
///
/// Drop: `deviator` strictly gains by severing `link`.
/// Add: `deviator` strictly gains from `link` and the partner does not lose.
/// `deltas` are Y(g') - Y(g) for link.first and link.second, in that order.
struct Deviation {
  DeviationKind kind;
  std::pair<Node, Node> link;
  Node deviator;
  std::array<Rational, 2> deltas;
};

struct StabilityReport {
  bool stable = true;
  std::optional<Deviation> witness;
};

/// Pairwise stability with the weak-inequality convention: a player
/// indifferent to dropping a link does not destabilize, and an absent link
/// destabilizes only when one endpoint strictly gains and the other does not
/// strictly lose. Drops are checked before adds, each in canonical pair order;
/// the first violation found is returned.
StabilityReport is_pairwise_stable(const GameSpec& spec, const Graph& g);
StabilityReport is_pairwise_stable(const PayoffModel& model, const Graph& g);

struct StableCensus {
  int n = 0;
  std::uint64_t graphs_examined = 0;
  std::vector<Graph> stable;  // increasing code order
  std::map<DegreeSequence, std::vector<GraphCode>> by_degree_sequence;
};

/// Every pairwise stable labeled graph on spec.n nodes. Code ranges are split
/// across `threads` workers; the result does not depend on the thread count.
/// Throws EnumerationTooLarge beyond the cap.
StableCensus enumerate_stable(const GameSpec& spec, int threads = 1);
StableCensus enumerate_stable(const PayoffModel& model, int threads = 1);

/// Payoff vectors of every labeled graph, indexed by code.
class PayoffTable {
 public:
  explicit PayoffTable(const PayoffModel& model);
  int n() const { return n_; }
  const std::vector<Rational>& operator[](GraphCode code) const { return rows_[code]; }
  GraphCode size() const { return rows_.size(); }

 private:
  int n_;
  std::vector<std::vector<Rational>> rows_;
};

struct ParetoResult {
  bool optimal = true;
  std::optional<Graph> dominated_by;  // first dominating graph in code order
};

/// True iff no graph gives every player at least as much and someone strictly more.
ParetoResult is_pareto_optimal(const GameSpec& spec, const Graph& g);
ParetoResult is_pareto_optimal(const PayoffTable& table, const Graph& g);

/// An inequality of the form margin > 0 (or >= 0 when !strict).
struct ConditionCheck {
  std::string name;
  bool satisfied = false;
  Rational margin;
  bool strict = true;
  std::vector<std::pair<std::string, Rational>> details;
};

struct NonnegReport {
  ConditionCheck bound;
  /// 2 q_i(g) - (n-1)/(n+1) [f(+1) - f(0)] > 0 and the f(-1) twin, minimised over firms.
  std::optional<ConditionCheck> ineq_plus;
  std::optional<ConditionCheck> ineq_minus;
};

/// Sufficient condition for nonnegative equilibrium quantities on every graph:
/// alpha - gamma0 - n max(f(n-1), f(1-n)) - (n-1)/2 max(f(1)-f(0), f(-1)-f(0)) > 0.
/// For linear costs the bound is alpha - gamma0 - gamma (n-1)(n-2).
/// Requires a common cost shape (shifts may differ); throws HeterogeneousShape.
NonnegReport check_nonneg_condition(const GameSpec& spec, const std::optional<Graph>& at = std::nullopt);

/// The five sufficient conditions for the complete graph to be the stable
/// outcome: strictly decreasing, convex, positive, alpha - gamma0 > n f(0),
/// and Df(k1) - n Df(k2) > 0 for all k1, k2 in {0..n-1}, Df(k) = f(k+1) - f(k).
/// Requires one common cost function; throws HeterogeneousShape.
std::vector<ConditionCheck> check_complete_graph_conditions(const GameSpec& spec);

bool has_common_shape(const GameSpec& spec);
bool has_common_cost(const GameSpec& spec);

/// One endpoint's side of a single-link deviation from a target-realizing graph.
struct EndpointDelta {
  Node player;
  Rational q;            // q_player(g)
  Rational closed_form;  // -Df ((n-1)/(n+1)) (2 q - ((n-1)/(n+1)) Df)
  Rational direct;       // Y_player(g') - Y_player(g) from two full evaluations
};

struct DeltaAnalysis {
  DeviationKind kind;
  std::pair<Node, Node> link;
  Rational delta_f;  // f(-1) - f(0) for a drop, f(1) - f(0) for an add
  std::array<EndpointDelta, 2> endpoints;
};

/// Payoff change for dropping (if present) or adding (if absent) `link` in a
/// graph whose degrees equal the firms' cost shifts. Requires a common shape.
/// Throws NotRealizingTarget, HeterogeneousShape.
DeltaAnalysis target_deviation_analysis(const GameSpec& spec, const Graph& g, std::pair<Node, Node> link);

}  // namespace netform
