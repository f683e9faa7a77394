#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netform/formation.hpp"
#include "netform/game.hpp"
#include "netform/graph.hpp"
#include "netform/stability.hpp"

namespace netform::io {

using nlohmann::json;

/// How rationals are rendered in reports: exact "p/q" strings, or fixed 4-place decimals.
struct NumberFormat {
  bool decimal = false;
  std::string operator()(const Rational& r) const { return decimal ? to_decimal(r, 4) : to_string(r); }
};

/// Parses JSON text; syntax errors become ParseError with "source:line:column: message".
json parse_json(std::string_view text, const std::string& source = "<input>");
json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Graphs: {"n":5,"edges":[[0,1],...]} (0-based), DOT, and the decimal code.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);
std::string graph_to_dot(const Graph& g, const std::string& name = "G");
json degree_sequence_to_json(const DegreeSequence& d);
/// "1,1,1,2,3" or "[1,1,1,2,3]".
DegreeSequence parse_degree_list(std::string_view text);

/// Rationals in configs are decimal or "p/q" strings; plain JSON integers are also accepted.
Rational rational_from_json(const json& j, const std::string& path);

/// Game config:
///   {"kind":"cournot","n":5,"alpha":"100","gamma0":"5","costs":[{"variant":"shifted_power","p":2,"k":2,"psi":"2"},...]}
///   {"kind":"linear_cournot","n":5,"alpha":"100","gamma0":"5","gamma":"1"}
///   {"kind":"degree_target","n":5,"k":[1,1,1,2,3],"penalty":{"variant":"shifted_power","p":2,"psi":"0"}}
/// Cost variants: shifted_power{p,k,psi}, reciprocal{a}, linear_decreasing{gamma}, table{values,k};
/// every variant takes an optional integer shift "k". Errors name the offending field.
GameSpec game_spec_from_json(const json& j);
json game_spec_to_json(const GameSpec& spec);
json cost_to_json(const CostFunction& cost);

/// {"game":{...degree_target...},"variant":"uniform"|"prefer_high_target","seed":1,"max_steps":100000,"trace":false}
FormationConfig formation_config_from_json(const json& j);

json stability_report_to_json(const StabilityReport& report, const NumberFormat& fmt = {});
json cournot_outcome_to_json(const CournotOutcome& out, const NumberFormat& fmt = {});
json payoffs_to_json(const std::vector<Rational>& y, const NumberFormat& fmt = {});

/// Census as JSON: one entry per stable graph with code, edges, degree sequence and payoffs.
json census_to_json(const StableCensus& census, const PayoffModel& model, const NumberFormat& fmt = {});
/// code,degree_sequence,Y_1..Y_n; degree sequence cells are space separated.
std::string census_to_csv(const StableCensus& census, const PayoffModel& model, const NumberFormat& fmt = {});
/// degree_sequence,count,codes
std::string degree_groups_to_csv(const StableCensus& census);

json condition_to_json(const ConditionCheck& c, const NumberFormat& fmt = {});
/// Fixed-width table: name, exact margin, 4-place decimal margin, PASS/FAIL.
std::string conditions_table(const std::vector<ConditionCheck>& checks);

/// degree,frequency[,target] rows for every degree with nonzero observed or target frequency.
std::string histogram_csv(const EnsembleStats& stats, const DegreeSequence& targets);
/// player,k_i,mean_objective,stddev
std::string per_player_csv(const EnsembleStats& stats, const DegreeSequence& targets);
json trace_to_json(const std::vector<std::pair<Node, Node>>& trace);
json ensemble_to_json(const EnsembleStats& stats);

}  // namespace netform::io
