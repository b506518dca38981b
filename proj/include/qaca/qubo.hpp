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

#include <cstddef>
#include <vector>

#include "json.hpp"

namespace qaca {

/// Dense upper-triangular n x n real matrix holding a QUBO.
///
/// Only entries with i <= j are stored. Reading below the diagonal returns 0;
/// writing there throws, so the upper-triangle invariant holds by construction.
class QuboMatrix {
 public:
    QuboMatrix() = default;
    explicit QuboMatrix(std::size_t n);

    /// From nested rows; rejects non-square input, nonzero lower entries and
    /// non-finite values.
    static QuboMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, double value);
    void add(std::size_t i, std::size_t j, double delta);

    /// All i <= j entries, row-major.
    std::vector<double> upper_entries() const;
    void set_upper_entries(const std::vector<double>& values);

    /// Largest |entry| and smallest nonzero |entry| (0 when the matrix is zero).
    double max_abs() const;
    double min_abs_nonzero() const;

    std::vector<std::vector<double>> to_rows() const;

    friend bool operator==(const QuboMatrix&, const QuboMatrix&) = default;

 private:
    std::size_t offset(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    std::vector<double> upper_;  // packed row-major upper triangle
};

nlohmann::json to_json(const QuboMatrix& q);
QuboMatrix qubo_from_json(const nlohmann::json& j);

}  // namespace qaca
