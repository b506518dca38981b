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

#include <stdexcept>
#include <string>
#include <utility>

namespace qaca {

/// Bad user input: unreadable or malformed data files, invalid configuration.
/// The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// A configuration value failed validation. `key()` names the offending entry.
class ConfigError : public InputError {
 public:
    ConfigError(std::string key, const std::string& message)
            : InputError(key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

 private:
    std::string key_;
};

}  // namespace qaca
