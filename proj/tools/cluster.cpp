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

// cluster: run clustering experiments and inspect their artifacts.
//
//   cluster run --data data/iris.csv --labels species --algo all --seeds 1,2,3,4,5
//   cluster inspect qaca-out/cluster_form_seed_1.json

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaca/cli.hpp"
#include "qaca/error.hpp"

namespace {

enum class Kind { Text, Value, Switch };

struct FlagDef {
    const char* flag;
    const char* key;
    Kind kind;
};

// Text values stay strings; Value flags are read as JSON literals so numbers
// reach the validator typed, and anything unparseable is passed on verbatim
// to be rejected with the key named.
constexpr FlagDef kFlags[] = {
        {"--data", "data", Kind::Text},
        {"--labels", "labels", Kind::Text},
        {"--algo", "algo", Kind::Text},
        {"--m", "m", Kind::Value},
        {"--n-v", "n_v", Kind::Value},
        {"--epsilon", "epsilon", Kind::Value},
        {"--intra-mode", "intra_mode", Kind::Text},
        {"--distance-mode", "distance_mode", Kind::Text},
        {"--scale-L", "scale_L", Kind::Switch},
        {"--standardize-features", "standardize_features", Kind::Switch},
        {"--solver", "solver", Kind::Text},
        {"--exhaustive-cap", "exhaustive_cap", Kind::Value},
        {"--sa-sweeps", "sa_sweeps", Kind::Value},
        {"--sa-restarts", "sa_restarts", Kind::Value},
        {"--sa-t-start", "sa_t_start", Kind::Value},
        {"--sa-t-end", "sa_t_end", Kind::Value},
        {"--kmeans-max-iter", "kmeans_max_iter", Kind::Value},
        {"--kmeans-restarts", "kmeans_restarts", Kind::Value},
        {"--sofm-epochs", "sofm_epochs", Kind::Value},
        {"--sofm-mu-start", "sofm_mu_start", Kind::Value},
        {"--sofm-mu-end", "sofm_mu_end", Kind::Value},
        {"--sofm-radius-start", "sofm_radius_start", Kind::Value},
        {"--sofm-radius-end", "sofm_radius_end", Kind::Value},
        {"--seeds", "seeds", Kind::Text},
        {"--output-dir", "output_dir", Kind::Text},
        {"--dump-assignments", "dump_assignments", Kind::Switch},
        {"--dump-icm", "dump_icm", Kind::Switch},
};

nlohmann::json literal(const std::string& raw) {
    try {
        return nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error&) {
        return raw;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-assisted clustering with classical QUBO solvers"};
    app.require_subcommand(1);

    std::map<std::string, std::string> help;
    for (const auto& [key, text] : qaca::config_keys()) help[key] = text;

    auto* run = app.add_subcommand("run", "cluster a labelled CSV dataset and write reports");
    std::string config_path;
    run->add_option("--config", config_path, "JSON config file; flags override its values")
            ->check(CLI::ExistingFile);
    std::map<std::string, std::string> text_values;
    std::map<std::string, bool> switch_values;
    std::map<std::string, CLI::Option*> options;
    for (const auto& f : kFlags) {
        if (f.kind == Kind::Switch) {
            const std::string name = std::string(f.flag) + ",!--no-" + std::string(f.flag + 2);
            options[f.key] = run->add_flag(name, switch_values[f.key], help[f.key]);
        } else {
            options[f.key] = run->add_option(f.flag, text_values[f.key], help[f.key]);
        }
    }

    auto* inspect = app.add_subcommand("inspect", "summarize a geometry, cluster-form or ICM JSON file");
    std::string artifact;
    inspect->add_option("path", artifact, "artifact to summarize")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (inspect->parsed()) return qaca::cmd_inspect(artifact, std::cout, std::cerr);

    try {
        nlohmann::json file = nlohmann::json::object();
        if (!config_path.empty()) file = qaca::read_config_file(config_path);
        nlohmann::json overrides = nlohmann::json::object();
        for (const auto& f : kFlags) {
            if (options[f.key]->count() == 0) continue;
            switch (f.kind) {
                case Kind::Switch: overrides[f.key] = switch_values[f.key]; break;
                case Kind::Value: overrides[f.key] = literal(text_values[f.key]); break;
                case Kind::Text: overrides[f.key] = text_values[f.key]; break;
            }
        }
        std::optional<std::string> env_dir;
        if (const char* e = std::getenv(qaca::kOutputDirEnv)) env_dir = e;
        const qaca::RunConfig config = qaca::resolve_config(file, overrides, env_dir);
        return qaca::cmd_run(config, std::cout, std::cerr);
    } catch (const qaca::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << '\n';
        return 2;
    }
}
