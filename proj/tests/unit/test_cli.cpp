// Copyright 2026 The QACA Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "qaca/cli.hpp"
#include "qaca/error.hpp"

using Catch::Matchers::ContainsSubstring;
using nlohmann::json;
using namespace qaca;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json base_flags(const std::filesystem::path& out) {
    return {{"data", testing::iris_path().string()}, {"labels", "species"}, {"output_dir", out.string()}};
}

int run_exe(const std::string& args) {
    const std::string cmd = std::string(QACA_CLUSTER_EXE) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config resolution") {
    SECTION("typical flags") {
        const RunConfig c = resolve_config(json::object(), {{"data", "iris.csv"},
                                                            {"labels", "species"},
                                                            {"algo", "all"},
                                                            {"m", 3},
                                                            {"seeds", "1,2,3,4,5"}});
        CHECK(c.run_qaca);
        CHECK(c.run_kmeans);
        CHECK(c.run_sofm);
        CHECK(c.include_published_em);
        CHECK(c.seeds == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
        CHECK(c.qaca.m == 3);
        CHECK(c.baselines.m == 3);
    }
    SECTION("invalid values name their key") {
        CHECK_THROWS_WITH(resolve_config(json::object(), {{"data", "x.csv"}, {"algo", "qaca"}, {"n_v", 0}}),
                          ContainsSubstring("n_v"));
        CHECK_THROWS_WITH(resolve_config(json::object(), {{"data", "x.csv"}, {"m", "three"}}),
                          ContainsSubstring("m:"));
        CHECK_THROWS_WITH(resolve_config(json::object(), {{"data", "x.csv"}, {"seeds", "1,x"}}),
                          ContainsSubstring("seeds"));
        CHECK_THROWS_WITH(resolve_config(json::object(), {{"data", "x.csv"}, {"intra_mode", "full"}}),
                          ContainsSubstring("intra_mode"));
        CHECK_THROWS_WITH(resolve_config(json::object(), {{"data", "x.csv"}, {"m", 9}}),
                          ContainsSubstring("m:"));
        CHECK_THROWS_WITH(resolve_config(json::object(), {{"data", "x.csv"}, {"sa_t_start", 0.1}, {"sa_t_end", 1.0}}),
                          ContainsSubstring("sa_t_start"));
    }
    SECTION("unknown keys and a missing dataset") {
        CHECK_THROWS_WITH(resolve_config({{"data", "x.csv"}, {"colour", 1}}, json::object()),
                          ContainsSubstring("colour"));
        CHECK_THROWS_WITH(resolve_config(json::object(), json::object()), ContainsSubstring("data"));
    }
    SECTION("flags beat the file, environment beats the file only") {
        const json file{{"data", "x.csv"}, {"epsilon", 0.5}, {"output_dir", "from-file"}};
        const RunConfig c = resolve_config(file, {{"epsilon", 2.0}}, std::string("from-env"));
        CHECK(c.qaca.epsilon == 2.0);
        CHECK(c.output_dir == "from-env");
        CHECK(resolve_config(file, {{"output_dir", "from-flag"}}, std::string("from-env")).output_dir ==
              "from-flag");
    }
    SECTION("resolved config round-trips through its JSON form") {
        const RunConfig c = resolve_config(json::object(), {{"data", "x.csv"},
                                                            {"algo", "qaca,sofm"},
                                                            {"n_v", 2},
                                                            {"distance_mode", "squared_euclidean"},
                                                            {"sa_t_end", 0.001},
                                                            {"seeds", json::array({7, 9})}});
        const RunConfig back = resolve_config(to_json(c), json::object());
        CHECK(to_json(back) == to_json(c));
        CHECK(to_json(c)["algo"] == "qaca,sofm");
    }
    SECTION("every documented key is accepted by the resolver") {
        CHECK(config_keys().size() == to_json(RunConfig{}).size());
    }
}

TEST_CASE("cmd_run writes a reproducible report directory") {
    testing::TempDir dir;
    json flags = base_flags(dir.path() / "a");
    flags["algo"] = "all";
    flags["seeds"] = "1,2";
    flags["dump_assignments"] = true;
    std::ostringstream out, err;
    REQUIRE(cmd_run(resolve_config(json::object(), flags), out, err) == 0);
    const auto a = dir.path() / "a";
    for (const char* f : {"config.json", "report.json", "report.txt", "timings.json", "geometry_seed_1.json",
                          "cluster_form_seed_2.json", "assignments_seed_1.csv", "assignments_seed_1.jsonl",
                          "probabilities_seed_2.txt"}) {
        CHECK(std::filesystem::exists(a / f));
    }
    CHECK_THAT(out.str(), ContainsSubstring("QACA") && ContainsSubstring("k-means") &&
                                  ContainsSubstring("SOFM") && ContainsSubstring("EM"));
    CHECK_THAT(slurp(a / "probabilities_seed_1.txt"), ContainsSubstring("instance 0 probabilities: "));

    // the echoed config alone reproduces the run byte for byte
    json echoed = json::parse(slurp(a / "config.json"));
    echoed["output_dir"] = (dir.path() / "b").string();
    std::ostringstream out2, err2;
    REQUIRE(cmd_run(resolve_config(echoed, json::object()), out2, err2) == 0);
    CHECK(slurp(a / "report.json") == slurp(dir.path() / "b" / "report.json"));
    CHECK(slurp(a / "assignments_seed_2.csv") == slurp(dir.path() / "b" / "assignments_seed_2.csv"));
}

TEST_CASE("cmd_run failures leave nothing behind") {
    testing::TempDir dir;
    std::ostringstream out, err;
    SECTION("missing dataset file") {
        json flags = base_flags(dir.path() / "x");
        flags["data"] = (dir.path() / "absent.csv").string();
        CHECK(cmd_run(resolve_config(json::object(), flags), out, err) == 1);
        CHECK_FALSE(std::filesystem::exists(dir.path() / "x"));
    }
    SECTION("no label column") {
        json flags = base_flags(dir.path() / "x");
        flags.erase("labels");
        CHECK(cmd_run(resolve_config(json::object(), flags), out, err) == 1);
        CHECK_THAT(err.str(), ContainsSubstring("species"));
    }
    SECTION("exhaustive search above the cap") {
        json flags = base_flags(dir.path() / "x");
        flags["n_v"] = 3;
        flags["solver"] = "exhaustive";
        CHECK(cmd_run(resolve_config(json::object(), flags), out, err) == 1);
        CHECK_THAT(err.str(), ContainsSubstring("solver"));
        CHECK_FALSE(std::filesystem::exists(dir.path() / "x"));
    }
    SECTION("unwritable output location is a runtime failure") {
        std::ofstream(dir.path() / "file") << "x";
        json flags = base_flags(dir.path() / "file" / "sub");
        flags["seeds"] = "1";
        CHECK(cmd_run(resolve_config(json::object(), flags), out, err) == 2);
    }
}

TEST_CASE("cmd_inspect") {
    testing::TempDir dir;
    json flags = base_flags(dir.path() / "r");
    flags["seeds"] = "3";
    flags["dump_icm"] = true;
    std::ostringstream run_out, run_err;
    REQUIRE(cmd_run(resolve_config(json::object(), flags), run_out, run_err) == 0);
    const auto r = dir.path() / "r";

    std::ostringstream out, err;
    CHECK(cmd_inspect(r / "cluster_form_seed_3.json", out, err) == 0);
    CHECK_THAT(out.str(), ContainsSubstring("intra-cluster entries: 30 negative, 0 zero, 0 positive") &&
                                  ContainsSubstring("inter-cluster entries: 0 negative, 0 zero, 48 positive"));
    out.str("");
    CHECK(cmd_inspect(r / "icm_seed_3" / "instance_5.json", out, err) == 0);
    CHECK_THAT(out.str(), ContainsSubstring("std=1 "));
    out.str("");
    CHECK(cmd_inspect(r / "geometry_seed_3.json", out, err) == 0);
    CHECK_THAT(out.str(), ContainsSubstring("qubits=12"));

    const std::string full = slurp(r / "cluster_form_seed_3.json");
    std::ofstream(dir.path() / "cut.json") << full.substr(0, full.size() / 2);
    CHECK(cmd_inspect(dir.path() / "cut.json", out, err) == 1);
    CHECK_THAT(err.str(), ContainsSubstring("schema error"));
    std::ofstream(dir.path() / "other.json") << R"({"schema_version": 1, "kind": "banana"})";
    CHECK(cmd_inspect(dir.path() / "other.json", out, err) == 1);
    std::ofstream(dir.path() / "old.json") << R"({"schema_version": 99, "kind": "geometry"})";
    CHECK(cmd_inspect(dir.path() / "old.json", out, err) == 1);
    CHECK(cmd_inspect(dir.path() / "absent.json", out, err) == 1);
}

TEST_CASE("cluster executable") {
    testing::TempDir dir;
    const std::string data = testing::iris_path().string();
    const std::string out = (dir.path() / "o").string();
    CHECK(run_exe("--help") == 0);
    CHECK(run_exe("run --help") == 0);
    CHECK(run_exe("") == 1);
    CHECK(run_exe("run --data " + data + " --labels species --bogus 1") == 1);
    CHECK(run_exe("run --data " + data + " --labels species --n-v 0 --output-dir " + out) == 1);
    CHECK(run_exe("run --labels species") == 1);
    CHECK(run_exe("run --data " + data + " --labels species --seeds 1 --algo kmeans --output-dir " + out) == 0);
    CHECK(std::filesystem::exists(dir.path() / "o" / "report.json"));

    std::ofstream(dir.path() / "cfg.json") << R"({"epsilon": 0.5, "seeds": [4], "algo": "qaca"})";
    const std::string out2 = (dir.path() / "o2").string();
    CHECK(run_exe("run --config " + (dir.path() / "cfg.json").string() + " --data " + data +
                  " --labels species --epsilon 0.75 --no-scale-L --output-dir " + out2) == 0);
    const json echoed = json::parse(slurp(dir.path() / "o2" / "config.json"));
    CHECK(echoed["epsilon"] == 0.75);
    CHECK(echoed["seeds"] == json::array({4}));
    CHECK(echoed["scale_L"] == false);

    const std::string env_out = (dir.path() / "env").string();
    CHECK(std::system(("QACA_OUTPUT_DIR=" + env_out + " " + QACA_CLUSTER_EXE + " run --data " + data +
                       " --labels species --seeds 1 --algo kmeans >/dev/null 2>&1")
                              .c_str()) == 0);
    CHECK(std::filesystem::exists(dir.path() / "env" / "report.txt"));
    CHECK(run_exe("inspect " + (dir.path() / "o2" / "geometry_seed_4.json").string()) == 0);
}
