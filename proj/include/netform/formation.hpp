#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "netform/game.hpp"
#include "netform/graph.hpp"

namespace netform {

/// Candidate-pair rule for the growth process.
enum class FormationVariant {
  /// First endpoint uniform over deficient nodes that still have a deficient
  /// non-neighbour; partner uniform over that node's deficient non-neighbours.
  kUniform,
  /// Both endpoints drawn uniformly among the deficient candidates with the
  /// largest desired degree.
  kPreferHighTarget,
};

const char* to_string(FormationVariant v);

struct FormationConfig {
  GameSpec spec;  // must be a degree-target game
  std::uint64_t seed = 0;
  int max_steps = 1'000'000;
  FormationVariant variant = FormationVariant::kUniform;
  bool record_trace = false;
};

enum class FormationOutcome { kStable, kStalled, kStepBudgetExhausted };

const char* to_string(FormationOutcome o);

struct FormationResult {
  Graph graph;
  int steps = 0;
  FormationOutcome outcome = FormationOutcome::kStalled;
  std::vector<std::pair<Node, Node>> trace;
};

/// Portable RNG: std::mt19937_64 seeded with the run seed, bounded draws by
/// rejection sampling (no reliance on standard-library distributions).
class FormationRng {
 public:
  explicit FormationRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Grows a graph from empty by joining two deficient (degree < target) nodes
/// per step and stops as soon as the graph is pairwise stable. Runs that can
/// make no further move while unstable end Stalled.
/// Throws InvalidSpec for non-degree-target games.
FormationResult simulate(const FormationConfig& config);

struct EnsembleStats {
  int runs = 0;
  /// mean_degree_histogram[d] = average number of nodes with degree d; sums to n.
  std::vector<double> mean_degree_histogram;
  std::vector<double> per_player_mean_objective;
  std::vector<double> per_player_objective_stddev;  // population standard deviation
  double success_rate = 0.0;                         // Stable with degree sequence == targets
  int stable_runs = 0;
  int stalled_runs = 0;
  int exhausted_runs = 0;
};

/// Runs `runs` simulations with seeds seed, seed+1, ...; identical results for any thread count.
/// `results`, when given, receives every run's FormationResult in run order.
EnsembleStats run_ensemble(const FormationConfig& config, int runs, int threads = 1,
                           std::vector<FormationResult>* results = nullptr);

/// Number of nodes per target degree, indexed by degree.
std::vector<double> target_degree_histogram(const DegreeSequence& targets);

/// Total-variation distance between two degree histograms after normalising each to a distribution.
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

/// The 100-player heavy-tailed target sequence: 75 nodes want 1 link, 14 want 2,
/// 5 want 3, 2 want 4, and one node each wants 5, 6, 7 and 8 links.
DegreeSequence power_law_targets();

}  // namespace netform
