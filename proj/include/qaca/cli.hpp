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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaca/evaluation.hpp"

namespace qaca {

inline constexpr const char* kOutputDirEnv = "QACA_OUTPUT_DIR";

/// Fully resolved settings of one `run` invocation.
struct RunConfig {
    std::string data_path;
    std::optional<std::string> label_column;
    bool run_qaca = true;
    bool run_kmeans = false;
    bool run_sofm = false;
    bool include_published_em = false;
    QacaConfig qaca;
    BaselineConfig baselines;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::filesystem::path output_dir = "qaca-out";
    bool dump_assignments = false;
    bool dump_icm = false;
};

/// Every key accepted in a config file, with its default, for `--help` and docs.
std::vector<std::pair<std::string, std::string>> config_keys();

/// Layers, lowest precedence first: built-in defaults, `file` (a config
/// document), the QACA_OUTPUT_DIR environment value if given, `overrides`
/// (command-line flags). Unknown keys and invalid values throw ConfigError
/// naming the key.
RunConfig resolve_config(const nlohmann::json& file, const nlohmann::json& overrides,
                         const std::optional<std::string>& env_output_dir = std::nullopt);

/// Reads a JSON config file; InputError when unreadable or not a JSON object.
nlohmann::json read_config_file(const std::filesystem::path& path);

/// The resolved config in config-file form; feeding it back to
/// resolve_config reproduces the same RunConfig.
nlohmann::json to_json(const RunConfig& c);

/// Runs the configured experiments and writes the reports into
/// c.output_dir. Returns 0 on success, 1 on invalid input, 2 on a runtime
/// failure; nothing is left behind on failure.
int cmd_run(const RunConfig& c, std::ostream& out, std::ostream& err);

/// Prints a summary of a geometry, cluster-form or ICM JSON file.
/// Returns 0, or 1 when the file is unreadable or does not match a schema.
int cmd_inspect(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

}  // namespace qaca
