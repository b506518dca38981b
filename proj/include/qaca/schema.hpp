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

#include <string>

#include "json.hpp"
#include "qaca/error.hpp"

namespace qaca {

/// Version stamped into every JSON document this project writes.
inline constexpr int kSchemaVersion = 1;

/// Throws InputError unless `j` is an object of the given kind at a supported version.
inline void check_schema(const nlohmann::json& j, const std::string& kind) {
    if (!j.is_object()) throw InputError(kind + ": document is not a JSON object");
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<int>() != kSchemaVersion) {
        throw InputError(kind + ": missing or unsupported schema_version");
    }
    if (!j.contains("kind") || j["kind"] != kind) {
        throw InputError("expected a '" + kind + "' document");
    }
}

}  // namespace qaca
