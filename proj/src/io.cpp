#include "netform/io.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "netform/errors.hpp"

namespace netform::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("config") : path) + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing required field");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  return j.get<int>();
}

std::string fixed(double v, int places = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(places) << v;
  return os.str();
}

std::string spaced(const DegreeSequence& d) {
  std::string out;
  for (int i = 0; i < d.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(d[i]);
  }
  return out;
}

}  // namespace

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::filesystem::path& path) { return parse_json(read_text_file(path), path.string()); }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  const int n = int_from_json(require(j, "n", ""), "n");
  const json& edges = require(j, "edges", "");
  if (!edges.is_array()) field_error("edges", "expected an array of [i,j] pairs");
  std::vector<std::pair<Node, Node>> list;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string path = "edges[" + std::to_string(e) + "]";
    const json& pair = edges[e];
    if (!pair.is_array() || pair.size() != 2) field_error(path, "expected [i,j]");
    list.emplace_back(int_from_json(pair[0], path + "[0]"), int_from_json(pair[1], path + "[1]"));
  }
  return Graph::from_edges(n, list);
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Node i = 0; i < g.n(); ++i) os << "  " << i << ";\n";
  for (auto [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

json degree_sequence_to_json(const DegreeSequence& d) { return d.values(); }

DegreeSequence parse_degree_list(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  }
  std::vector<int> d;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in degree list \"" + std::string(text) + "\"");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad degree \"" + item + "\"");
    }
    if (used != item.size() || v < 0) throw ParseError("bad degree \"" + item + "\"");
    d.push_back(v);
  }
  if (d.empty()) throw ParseError("empty degree list");
  return DegreeSequence(std::move(d));
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  if (!j.is_string()) field_error(path, "expected a rational string such as \"5\", \"2.5\" or \"1/3\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    field_error(path, e.what());
  }
}

namespace {

CostFunction cost_from_json(const json& j, const std::string& path) {
  const std::string variant_path = join(path, "variant");
  const json& v = require(j, "variant", path);
  if (!v.is_string()) field_error(variant_path, "expected a string");
  const std::string variant = v.get<std::string>();
  int shift = 0;
  if (auto it = j.find("k"); it != j.end()) shift = int_from_json(*it, join(path, "k"));

  try {
    if (variant == "shifted_power") {
      const int p = int_from_json(require(j, "p", path), join(path, "p"));
      Rational psi = 0;
      if (auto it = j.find("psi"); it != j.end()) psi = rational_from_json(*it, join(path, "psi"));
      return CostFunction(ShiftedPower{p, psi}, shift);
    }
    if (variant == "reciprocal") {
      return CostFunction(Reciprocal{rational_from_json(require(j, "a", path), join(path, "a"))}, shift);
    }
    if (variant == "linear_decreasing") {
      return CostFunction(LinearDecreasing{rational_from_json(require(j, "gamma", path), join(path, "gamma"))},
                          shift);
    }
    if (variant == "table") {
      const json& values = require(j, "values", path);
      if (!values.is_array()) field_error(join(path, "values"), "expected an array");
      std::vector<Rational> vals;
      for (std::size_t i = 0; i < values.size(); ++i) {
        vals.push_back(rational_from_json(values[i], join(path, "values") + "[" + std::to_string(i) + "]"));
      }
      return CostFunction(Table{std::move(vals)}, shift);
    }
  } catch (const InvalidSpec& e) {
    field_error(path, e.what());
  }
  field_error(variant_path, "unknown cost variant \"" + variant + "\"");
}

json shape_to_json(const CostShape& shape) {
  return std::visit(overloaded{
                        [](const ShiftedPower& s) {
                          return json{{"variant", "shifted_power"}, {"p", s.exponent}, {"psi", to_string(s.offset)}};
                        },
                        [](const Reciprocal& s) { return json{{"variant", "reciprocal"}, {"a", to_string(s.a)}}; },
                        [](const LinearDecreasing& s) {
                          return json{{"variant", "linear_decreasing"}, {"gamma", to_string(s.gamma)}};
                        },
                        [](const Table& s) {
                          json values = json::array();
                          for (const auto& v : s.values) values.push_back(to_string(v));
                          return json{{"variant", "table"}, {"values", std::move(values)}};
                        },
                    },
                    shape);
}

}  // namespace

GameSpec game_spec_from_json(const json& j) {
  if (!j.is_object()) field_error("", "expected a JSON object");
  const json& kind_j = require(j, "kind", "");
  if (!kind_j.is_string()) field_error("kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  const int n = int_from_json(require(j, "n", ""), "n");
  if (n < kMinNodes || n > kMaxNodes) field_error("n", "must be between 2 and " + std::to_string(kMaxNodes));

  try {
    if (kind == "degree_target") {
      const json& k = require(j, "k", "");
      if (!k.is_array() || static_cast<int>(k.size()) != n) field_error("k", "expected an array of n integers");
      std::vector<int> targets;
      for (std::size_t i = 0; i < k.size(); ++i) targets.push_back(int_from_json(k[i], "k[" + std::to_string(i) + "]"));
      const CostFunction penalty = cost_from_json(require(j, "penalty", ""), "penalty");
      if (penalty.shift() != 0) field_error("penalty.k", "the penalty is shifted by the targets; omit k");
      return make_degree_target(DegreeSequence(std::move(targets)), penalty.shape());
    }
    if (kind == "cournot") {
      const Rational alpha = rational_from_json(require(j, "alpha", ""), "alpha");
      const Rational gamma0 = rational_from_json(require(j, "gamma0", ""), "gamma0");
      std::vector<CostFunction> costs;
      if (auto it = j.find("costs"); it != j.end()) {
        if (!it->is_array() || static_cast<int>(it->size()) != n) {
          field_error("costs", "expected an array of n cost functions");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
          costs.push_back(cost_from_json((*it)[i], "costs[" + std::to_string(i) + "]"));
        }
      } else {
        // one shared shape, optionally shifted per firm by "k"
        const CostFunction common = cost_from_json(require(j, "cost", ""), "cost");
        std::vector<int> shifts(static_cast<std::size_t>(n), common.shift());
        if (auto k = j.find("k"); k != j.end()) {
          if (!k->is_array() || static_cast<int>(k->size()) != n) field_error("k", "expected an array of n integers");
          for (int i = 0; i < n; ++i) shifts[i] = int_from_json((*k)[i], "k[" + std::to_string(i) + "]");
        }
        for (int i = 0; i < n; ++i) costs.emplace_back(common.shape(), shifts[i]);
      }
      return make_cournot(alpha, gamma0, std::move(costs));
    }
    if (kind == "linear_cournot") {
      return make_linear_cournot(n, rational_from_json(require(j, "alpha", ""), "alpha"),
                                 rational_from_json(require(j, "gamma0", ""), "gamma0"),
                                 rational_from_json(require(j, "gamma", ""), "gamma"));
    }
  } catch (const InvalidSpec& e) {
    field_error("", e.what());
  } catch (const DomainError& e) {
    field_error("", e.what());
  }
  field_error("kind", "unknown game kind \"" + kind + "\"");
}

json cost_to_json(const CostFunction& cost) {
  json j = shape_to_json(cost.shape());
  j["k"] = cost.shift();
  return j;
}

json game_spec_to_json(const GameSpec& spec) {
  if (spec.is_degree_target()) {
    const auto& g = spec.degree_target();
    return {{"kind", "degree_target"}, {"n", spec.n}, {"k", g.targets.values()}, {"penalty", shape_to_json(g.penalty)}};
  }
  const auto& g = spec.cournot();
  json costs = json::array();
  for (const auto& c : g.costs) costs.push_back(cost_to_json(c));
  return {{"kind", "cournot"},
          {"n", spec.n},
          {"alpha", to_string(g.alpha)},
          {"gamma0", to_string(g.gamma0)},
          {"costs", std::move(costs)}};
}

FormationConfig formation_config_from_json(const json& j) {
  if (!j.is_object()) field_error("", "expected a JSON object");
  FormationConfig config;
  try {
    config.spec = game_spec_from_json(require(j, "game", ""));
  } catch (const ParseError& e) {
    throw ParseError(std::string("game.") + e.what());
  }
  if (!config.spec.is_degree_target()) field_error("game.kind", "formation needs a degree_target game");
  if (auto it = j.find("variant"); it != j.end()) {
    const std::string v = it->is_string() ? it->get<std::string>() : "";
    if (v == "uniform") {
      config.variant = FormationVariant::kUniform;
    } else if (v == "prefer_high_target") {
      config.variant = FormationVariant::kPreferHighTarget;
    } else {
      field_error("variant", "expected \"uniform\" or \"prefer_high_target\"");
    }
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) field_error("seed", "expected a non-negative integer");
    config.seed = it->get<std::uint64_t>();
  }
  if (auto it = j.find("max_steps"); it != j.end()) {
    config.max_steps = int_from_json(*it, "max_steps");
    if (config.max_steps < 1) field_error("max_steps", "must be at least 1");
  }
  if (auto it = j.find("trace"); it != j.end()) {
    if (!it->is_boolean()) field_error("trace", "expected true or false");
    config.record_trace = it->get<bool>();
  }
  return config;
}

json payoffs_to_json(const std::vector<Rational>& y, const NumberFormat& fmt) {
  json out = json::array();
  for (const auto& v : y) out.push_back(fmt(v));
  return out;
}

json stability_report_to_json(const StabilityReport& report, const NumberFormat& fmt) {
  json j{{"stable", report.stable}};
  if (report.witness) {
    const Deviation& w = *report.witness;
    j["witness"] = {{"kind", to_string(w.kind)},
                    {"link", {w.link.first, w.link.second}},
                    {"deviator", w.deviator},
                    {"payoff_deltas", {fmt(w.deltas[0]), fmt(w.deltas[1])}}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json cournot_outcome_to_json(const CournotOutcome& out, const NumberFormat& fmt) {
  return {{"q", payoffs_to_json(out.q, fmt)},         {"Q", fmt(out.Q)},
          {"P", fmt(out.P)},                          {"c", payoffs_to_json(out.c, fmt)},
          {"Y", payoffs_to_json(out.Y, fmt)},         {"negative_quantity", out.negative_quantity}};
}

json census_to_json(const StableCensus& census, const PayoffModel& model, const NumberFormat& fmt) {
  json graphs = json::array();
  for (const Graph& g : census.stable) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    graphs.push_back({{"code", g.code_string()},
                      {"edges", std::move(edges)},
                      {"degree_sequence", g.degree_sequence().values()},
                      {"payoffs", payoffs_to_json(model.payoffs(g), fmt)}});
  }
  json groups = json::array();
  for (const auto& [seq, codes] : census.by_degree_sequence) {
    groups.push_back({{"degree_sequence", seq.values()}, {"count", codes.size()}, {"codes", codes}});
  }
  return {{"n", census.n},
          {"graphs_examined", census.graphs_examined},
          {"stable_count", census.stable.size()},
          {"stable", std::move(graphs)},
          {"by_degree_sequence", std::move(groups)}};
}

std::string census_to_csv(const StableCensus& census, const PayoffModel& model, const NumberFormat& fmt) {
  std::ostringstream os;
  os << "code,degree_sequence";
  for (int i = 1; i <= census.n; ++i) os << ",Y_" << i;
  os << '\n';
  for (const Graph& g : census.stable) {
    os << g.code_string() << ',' << spaced(g.degree_sequence());
    for (const auto& y : model.payoffs(g)) os << ',' << fmt(y);
    os << '\n';
  }
  return os.str();
}

std::string degree_groups_to_csv(const StableCensus& census) {
  std::ostringstream os;
  os << "degree_sequence,count,codes\n";
  for (const auto& [seq, codes] : census.by_degree_sequence) {
    os << spaced(seq) << ',' << codes.size() << ',';
    for (std::size_t i = 0; i < codes.size(); ++i) os << (i ? " " : "") << codes[i];
    os << '\n';
  }
  return os.str();
}

json condition_to_json(const ConditionCheck& c, const NumberFormat& fmt) {
  json details = json::object();
  for (const auto& [k, v] : c.details) details[k] = fmt(v);
  return {{"name", c.name},
          {"satisfied", c.satisfied},
          {"margin", fmt(c.margin)},
          {"margin_decimal", to_decimal(c.margin, 4)},
          {"strict", c.strict},
          {"details", std::move(details)}};
}

std::string conditions_table(const std::vector<ConditionCheck>& checks) {
  std::ostringstream os;
  os << std::left << std::setw(34) << "condition" << std::setw(24) << "margin" << std::setw(14) << "decimal"
     << "result\n";
  for (const auto& c : checks) {
    os << std::left << std::setw(34) << c.name << std::setw(24) << to_string(c.margin) << std::setw(14)
       << to_decimal(c.margin, 4) << (c.satisfied ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

std::string histogram_csv(const EnsembleStats& stats, const DegreeSequence& targets) {
  const std::vector<double> target = target_degree_histogram(targets);
  const std::size_t len = std::max(target.size(), stats.mean_degree_histogram.size());
  std::ostringstream os;
  os << "degree,frequency,target\n";
  for (std::size_t d = 0; d < len; ++d) {
    const double f = d < stats.mean_degree_histogram.size() ? stats.mean_degree_histogram[d] : 0.0;
    const double t = d < target.size() ? target[d] : 0.0;
    if (f == 0.0 && t == 0.0) continue;
    os << d << ',' << fixed(f) << ',' << fixed(t) << '\n';
  }
  return os.str();
}

std::string per_player_csv(const EnsembleStats& stats, const DegreeSequence& targets) {
  std::ostringstream os;
  os << "player,k_i,mean_objective,stddev\n";
  for (int i = 0; i < targets.size(); ++i) {
    os << i << ',' << targets[i] << ',' << fixed(stats.per_player_mean_objective[i]) << ','
       << fixed(stats.per_player_objective_stddev[i]) << '\n';
  }
  return os.str();
}

json trace_to_json(const std::vector<std::pair<Node, Node>>& trace) {
  json out = json::array();
  for (auto [i, j] : trace) out.push_back({i, j});
  return out;
}

json ensemble_to_json(const EnsembleStats& stats) {
  return {{"runs", stats.runs},
          {"success_rate", stats.success_rate},
          {"stable_runs", stats.stable_runs},
          {"stalled_runs", stats.stalled_runs},
          {"exhausted_runs", stats.exhausted_runs},
          {"mean_degree_histogram", stats.mean_degree_histogram},
          {"per_player_mean_objective", stats.per_player_mean_objective},
          {"per_player_objective_stddev", stats.per_player_objective_stddev}};
}

}  // namespace netform::io
