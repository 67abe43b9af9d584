#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the CLI binary, capturing stdout; stderr is left alone.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string tmp = std::string(LCTFORGE_DATA_DIR) + "/_cli_out.txt";
    std::string cmd = (env.empty() ? "" : env + " ") + std::string(LCTFORGE_BIN) + " " +
                      args + " > " + tmp;
    int rc = std::system(cmd.c_str());
    RunResult res;
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    std::remove(tmp.c_str());
    return res;
}

std::string data_file(const std::string& name, const std::string& contents) {
    std::string path = std::string(LCTFORGE_DATA_DIR) + "/" + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

const char* kSurface = R"({
  "schema": 1,
  "basis": ["H", "E"],
  "dim": 2,
  "form": {"H,H": "1", "H,E": "0", "E,E": "-1"},
  "candidates": [
    {"name": "E", "class": {"E": "1"}},
    {"name": "H-E", "class": {"H": "1", "E": "-1"}}
  ]
})";

} // namespace

TEST_CASE("lct subcommand reports both threshold readings") {
    RunResult r = run_cli("lct --ideal \"x1*x2, x3\" --dim 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("lct = 1/m: 2") != std::string::npos);
    CHECK(r.out.find("additive-split value (h+k)/(hk) + 1 = 3") != std::string::npos);
    CHECK(r.out.find("both exceed 1") != std::string::npos);

    json j = json::parse(run_cli("--json lct --ideal \"x1*x2, x3\" --dim 3").out);
    CHECK(j["schema"] == 1);
    CHECK(j["lct"] == "2");
    CHECK(j["lct_additive_split"] == "3");
}

TEST_CASE("lct json round-trips through the ideal schema") {
    json j = json::parse(run_cli("--json lct --ideal \"x1^2, x2^3\" --dim 2").out);
    CHECK(j["lct"] == "5/6");
    std::string path = data_file("roundtrip_ideal.json", j["ideal"].dump());
    json again = json::parse(run_cli("--json lct --input " + path).out);
    CHECK(again["ideal"] == j["ideal"]);
    CHECK(again["lct"] == "5/6");
}

TEST_CASE("unit ideal reports the infinite sentinel") {
    RunResult r = run_cli("lct --ideal \"1\" --dim 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("+inf") != std::string::npos);
}

TEST_CASE("mult-ideal lists howald monomials") {
    json j = json::parse(
        run_cli("--json mult-ideal --ideal \"x1^2, x2^2\" --dim 2 --r 1 --bound 2").out);
    REQUIRE(j["monomials"].is_array());
    CHECK(j["monomials"].size() == 5);
}

TEST_CASE("blowup path table includes the s=3 normal forms") {
    RunResult r = run_cli("blowup --paths 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("(x, z)") != std::string::npos);
    CHECK(r.out.find("(x*y, z)") != std::string::npos);
    CHECK(r.out.find("(x^2*y, z)") != std::string::npos);
    CHECK(r.out.find("(x*y^2, z)") != std::string::npos);

    json j = json::parse(run_cli("--json blowup --paths 2").out);
    REQUIRE(j["paths"].size() == 4);
    CHECK(j["paths"][0]["path"] == "AA");
    CHECK(j["paths"][1]["lct"] == "2");
    CHECK(j["paths"][1]["lct_additive_split"] == "3");
}

TEST_CASE("blowup sequence verdicts") {
    std::string seq = data_file("seq.json", R"({
      "schema": 1,
      "centers": [
        {"kind": "curve", "condition": "e", "subcase": "latest"},
        {"kind": "point", "condition": "a"},
        {"kind": "curve", "condition": "e", "subcase": "latest"}
      ]
    })");
    json j = json::parse(run_cli("--json blowup --input " + seq).out);
    CHECK(j["verdict"] == "vanishes");
    CHECK(j["min_lct"] == "2");
    CHECK(j["prune"]["centers"].size() == 2);
    CHECK(j["prune"]["log"].size() == 3);
    CHECK(j["prune"]["log"][1]["action"] == "deleted");

    std::string trivial = data_file("seq_trivial.json", R"({
      "schema": 1,
      "centers": [{"kind": "curve", "condition": "d"}]
    })");
    json t = json::parse(run_cli("--json blowup --input " + trivial).out);
    CHECK(t["verdict"] == "trivial_by_remark");
}

TEST_CASE("zariski subcommand with certificates") {
    std::string surf = data_file("surface.json", kSurface);
    json j = json::parse(
        run_cli("--json zariski --surface " + surf + " --class '{\"H\":\"1\",\"E\":\"2\"}'").out);
    CHECK(j["P"] == json::parse(R"({"H":"1"})"));
    REQUIRE(j["N"].size() == 1);
    CHECK(j["N"][0]["curve"] == "E");
    CHECK(j["N"][0]["coefficient"] == "2");
    CHECK(j["certificates"]["gram_negative_definite"] == true);
}

TEST_CASE("product subcommand squares by default") {
    std::string surf = data_file("surface2.json", kSurface);
    json j = json::parse(
        run_cli("--json product --surface " + surf + " --class '{\"H\":\"1\",\"E\":\"2\"}'").out);
    CHECK(j["positive_product"] == "1");
}

TEST_CASE("morse subcommands") {
    std::string strong = data_file("morse_strong.json", R"({
      "schema": 1, "n": 2, "s": 1,
      "mixed_LF": ["1", "1"],
      "components": [{"label": "E", "nu": "2", "nu_prime": "2",
                      "mixed_LuY": ["0", "0"]}]
    })");
    json j = json::parse(run_cli("--json morse strong --input " + strong).out);
    CHECK(j["coefficient"] == "1");

    std::string nef = data_file("morse_nef.json",
                                R"({"schema": 1, "n": 2, "s": 1, "table": ["4", "1"]})");
    json jn = json::parse(run_cli("--json morse nef --input " + nef).out);
    CHECK(jn["coefficient"] == "-2");

    std::string trap = data_file("morse_trapani.json", R"({
      "schema": 1, "n": 2,
      "L_pow_n": "1", "L_pow_n1_posF": "1",
      "divisors": [{"label": "E", "nu": "2", "mixed_LuD": ["0", "0"]}]
    })");
    json jt = json::parse(run_cli("--json morse trapani --input " + trap).out);
    CHECK(jt["coefficient"] == "-1");

    std::string surf = data_file("surface3.json", kSurface);
    std::string lfu = data_file("morse_surface.json", R"({
      "schema": 1,
      "L": {"H": "1"}, "F": {"H": "1", "E": "2"}, "u": {"H": "1"}
    })");
    json js = json::parse(
        run_cli("--json morse surface --surface " + surf + " --input " + lfu).out);
    CHECK(js["coefficient"] == "1");
}

TEST_CASE("exit codes: 2 for bad input, 3 for mathematical failure") {
    CHECK(run_cli("lct --ideal \"y1\" --dim 2").status == 2);
    CHECK(run_cli("lct --ideal \"x1\"").status == 2);  // missing --dim
    CHECK(run_cli("nonsense").status == 2);

    std::string surf = data_file("surface4.json", kSurface);
    // -E is not pseudo-effective relative to the candidates: math failure.
    RunResult r = run_cli("zariski --surface " + surf + " --class '{\"E\":\"-1\"}'");
    CHECK(r.status == 3);

    std::string bad_schema = data_file("bad_schema.json", R"({"dim": 2})");
    CHECK(run_cli("lct --input " + bad_schema).status == 2);
}

TEST_CASE("deterministic output across runs") {
    std::string a = run_cli("--json blowup --paths 4").out;
    std::string b = run_cli("--json blowup --paths 4").out;
    CHECK(a == b);
}

TEST_CASE("oracle-volume smoke run on a coarse grid") {
    json j = json::parse(
        run_cli("--json oracle-volume --ideal \"x1\" --dim 1 --grid 64").out);
    double slope = j["fitted_slope"].get<double>();
    CHECK(slope > 1.9);
    CHECK(slope < 2.1);
}

TEST_CASE("LCTFORGE_PATH_BOUND overrides the path bound") {
    RunResult deep = run_cli("blowup --paths 8");
    CHECK(deep.status == 0);
    RunResult blocked = run_cli("blowup --paths 8", "LCTFORGE_PATH_BOUND=4");
    CHECK(blocked.status == 2);
    RunResult raised = run_cli("blowup --paths 4", "LCTFORGE_PATH_BOUND=4");
    CHECK(raised.status == 0);
}

TEST_CASE("every json output carries schema 1") {
    std::string surf = data_file("surface5.json", kSurface);
    std::string nef = data_file("nef5.json",
                                R"({"schema": 1, "n": 2, "s": 1, "table": ["4", "1"]})");
    const std::string cmds[] = {
        "--json lct --ideal \"x1\" --dim 1",
        "--json mult-ideal --ideal \"x1\" --dim 1 --r 1 --bound 1",
        "--json blowup --paths 2",
        "--json zariski --surface " + surf + " --class '{\"H\":\"1\"}'",
        "--json product --surface " + surf + " --class '{\"H\":\"1\"}'",
        "--json morse nef --input " + nef,
        "--json oracle-volume --ideal \"x1\" --dim 1 --grid 16",
    };
    for (const auto& cmd : cmds) {
        RunResult r = run_cli(cmd);
        CHECK(r.status == 0);
        json j = json::parse(r.out);
        CHECK(j["schema"] == 1);
    }
}
