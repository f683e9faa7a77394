#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "netform/io.hpp"
#include "netform/netform.hpp"

namespace fs = std::filesystem;
using netform::io::json;

namespace {

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI through the shell; stderr is merged into `out` when `merge` is set.
Run run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string("\"") + NETFORM_CLI_PATH + "\" " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string config(const std::string& name) { return std::string(NETFORM_CONFIG_DIR) + "/" + name; }
std::string golden(const std::string& name) {
  return netform::io::read_text_file(fs::path(NETFORM_GOLDEN_DIR) / name);
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("netform_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string write(const fs::path& dir, const std::string& name, const std::string& text) {
  netform::io::write_text_file(dir / name, text);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("check: stable, unstable, malformed") {
  const auto dir = scratch("check");
  const auto complete = write(dir, "complete.json", netform::io::graph_to_json(netform::Graph::complete(5)).dump());
  const auto minus =
      write(dir, "minus.json", netform::io::graph_to_json(netform::Graph::complete(5).without_edge(0, 1)).dump());

  const auto ok = run("check --config " + config("reciprocal_cournot.json") + " --graph " + complete);
  CHECK(ok.code == 0);
  CHECK(ok.out == golden("check_reciprocal_complete.json"));

  const auto bad = run("check --config " + config("reciprocal_cournot.json") + " --graph " + minus);
  CHECK(bad.code == 1);
  CHECK(bad.out == golden("check_reciprocal_minus_01.json"));

  const auto spec = netform::io::game_spec_from_json(netform::io::read_json_file(config("reciprocal_cournot.json")));
  const auto report = netform::is_pairwise_stable(spec, netform::Graph::complete(5).without_edge(0, 1));
  CHECK(bad.out == netform::io::stability_report_to_json(report).dump(2) + "\n");

  const auto truncated = write(dir, "truncated.json", "{\n  \"kind\": \"cournot\",\n  \"n\": 5,\n  \"alpha\": ");
  const auto parse = run("check --config " + truncated + " --graph " + complete, true);
  CHECK(parse.code == 2);
  CHECK(parse.out.find("truncated.json:4:") != std::string::npos);

  const auto equal = write(dir, "equal.json", R"({"kind":"linear_cournot","n":5,"alpha":"5","gamma0":"5","gamma":"1"})");
  CHECK(run("check --config " + equal + " --graph " + complete).code == 2);

  const auto small = write(dir, "small.json", netform::io::graph_to_json(netform::Graph(4)).dump());
  CHECK(run("check --config " + config("reciprocal_cournot.json") + " --graph " + small).code == 2);
  CHECK(run("check --config " + config("reciprocal_cournot.json")).code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("enumerate: census files and manifest") {
  const auto dir = scratch("enumerate");
  const auto res = run("enumerate --config " + config("asymmetric_cournot.json") + " --n 5 --threads 3 --out " +
                       dir.string());
  CHECK(res.code == 0);
  CHECK(res.out == "stable_count: 31\n");

  const netform::PayoffModel model(
      netform::io::game_spec_from_json(netform::io::read_json_file(config("asymmetric_cournot.json"))));
  const auto census = netform::enumerate_stable(model);
  CHECK(netform::io::read_text_file(dir / "tables/stable.csv") == netform::io::census_to_csv(census, model));
  CHECK(netform::io::read_text_file(dir / "graphs/stable.json") ==
        netform::io::census_to_json(census, model).dump(2) + "\n");
  CHECK(netform::io::read_text_file(dir / "tables/by_degree_sequence.csv") ==
        netform::io::degree_groups_to_csv(census));
  CHECK(fs::exists(dir / "graphs/stable_502.dot"));
  CHECK(fs::exists(dir / "graphs/stable_947.dot"));

  const json manifest = netform::io::read_json_file(dir / "manifest.json");
  CHECK(manifest["command"] == "enumerate");
  CHECK(manifest["tool_version"] == netform::kVersion);
  CHECK(manifest["config"]["n"] == 5);
  CHECK(manifest["outputs"].size() == 31 + 3);
  for (const auto& f : manifest["outputs"]) CHECK(fs::exists(dir / f.get<std::string>()));

  CHECK(run("enumerate --config " + config("asymmetric_cournot.json") + " --n 6").code == 2);
}

TEST_CASE("enumerate: stdout census") {
  const auto linear = run("enumerate --config " + config("linear_cournot.json"));
  CHECK(linear.code == 0);
  const json j = json::parse(linear.out);
  REQUIRE(j["stable"].size() == 1);
  CHECK(j["stable"][0]["code"] == "1023");

  const auto dir = scratch("enumerate_zero");
  const auto zero = write(dir, "zero.json",
                          R"({"kind":"degree_target","n":3,"k":[0,0,0],"penalty":{"variant":"shifted_power","p":2}})");
  const json z = json::parse(run("enumerate --config " + zero).out);
  REQUIRE(z["stable"].size() == 1);
  CHECK(z["stable"][0]["code"] == "0");

  const auto big = write(dir, "big.json",
                         R"({"kind":"degree_target","n":9,"k":[1,1,1,1,1,1,1,1,0],"penalty":{"variant":"shifted_power","p":2}})");
  const auto refused = run("enumerate --config " + big, true);
  CHECK(refused.code == 2);
  CHECK(refused.out.find("cap") != std::string::npos);
}

TEST_CASE("conditions") {
  const auto rec = run("conditions --config " + config("reciprocal_cournot.json"));
  CHECK(rec.code == 0);
  CHECK(rec.out == golden("conditions_reciprocal.txt"));

  const auto asym = run("conditions --config " + config("asymmetric_cournot.json"));
  CHECK(asym.code == 0);
  CHECK(asym.out == golden("conditions_asymmetric.txt"));

  const auto lin = run("conditions --config " + config("linear_cournot.json"));
  CHECK(lin.code == 1);
  CHECK(lin.out.find("nonneg_linear                     83 ") != std::string::npos);

  const auto dir = scratch("conditions");
  const auto low = write(dir, "low.json",
                         R"({"kind":"cournot","n":5,"alpha":"6","gamma0":"5","cost":{"variant":"reciprocal","a":"3"}})");
  const auto low_run = run("conditions --config " + low + " --out " + (dir / "out").string());
  CHECK(low_run.code == 1);
  CHECK(low_run.out.find("alpha_minus_gamma0_exceeds_n_f0   -2/3") != std::string::npos);
  CHECK(fs::exists(dir / "out/tables/conditions.json"));
  CHECK(fs::exists(dir / "out/manifest.json"));

  CHECK(run("conditions --config " + config("counterexample_degree_target.json")).code == 2);
  const auto mixed = write(dir, "mixed.json", R"({"kind":"cournot","n":2,"alpha":"50","gamma0":"5","costs":[
      {"variant":"reciprocal","a":"1"},{"variant":"shifted_power","p":2,"k":0,"psi":"1"}]})");
  const auto mixed_run = run("conditions --config " + mixed, true);
  CHECK(mixed_run.code == 2);
  CHECK(mixed_run.out.find("common") != std::string::npos);
}

TEST_CASE("simulate is reproducible from its manifest") {
  const auto dir = scratch("simulate");
  const auto cfg = write(dir, "cfg.json", R"({"game":{"kind":"degree_target","n":8,"k":[1,1,2,2,3,1,1,1],
      "penalty":{"variant":"shifted_power","p":2,"psi":"2"}},"variant":"uniform","seed":5,"max_steps":100,"trace":true})");
  const auto a = run("simulate --config " + cfg + " --runs 4 --threads 2 --out " + (dir / "a").string());
  const auto b = run("simulate --config " + cfg + " --runs 4 --threads 1 --out " + (dir / "b").string());
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("success_rate: ", 0) == 0);
  const json manifest = netform::io::read_json_file(dir / "a/manifest.json");
  CHECK(manifest["seed"] == 5);
  for (const auto& f : manifest["outputs"]) {
    const std::string rel = f.get<std::string>();
    CHECK(netform::io::read_text_file(dir / "a" / rel) == netform::io::read_text_file(dir / "b" / rel));
  }
  const json run0 = netform::io::read_json_file(dir / "a/graphs/runs/run_0.json");
  CHECK(run0["seed"] == 5);
  CHECK(run0.contains("trace"));
  CHECK(run("simulate --config " + cfg + " --runs 0").code == 2);
  CHECK(run("simulate --config " + config("linear_cournot.json")).code == 2);
}

TEST_CASE("realize") {
  const auto ok = run("realize 1,1,1,2,3");
  CHECK(ok.code == 0);
  CHECK(ok.out == golden("realize_11123.json"));
  const auto no = run("realize 1,1,1");
  CHECK(no.code == 1);
  CHECK(no.out == "not graphical: [1,1,1]\n");
  CHECK(run("realize 1,a").code == 2);
}
