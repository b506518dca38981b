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

#include "qaca/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qaca/error.hpp"

namespace qaca {

QuboMatrix::QuboMatrix(std::size_t n) : n_(n), upper_(n * (n + 1) / 2, 0.0) {}

QuboMatrix QuboMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    QuboMatrix q(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw std::invalid_argument("QUBO matrix row " + std::to_string(i) +
                                        " has wrong length");
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
            const double v = rows[i][j];
            if (!std::isfinite(v)) {
                throw std::invalid_argument("QUBO matrix entry is not finite");
            }
            if (j < i) {
                if (v != 0.0) {
                    throw std::invalid_argument("QUBO matrix has a nonzero entry below the diagonal");
                }
                continue;
            }
            q.set(i, j, v);
        }
    }
    return q;
}

std::size_t QuboMatrix::offset(std::size_t i, std::size_t j) const {
    // row i starts after rows 0..i-1, which hold n, n-1, ... entries
    return i * n_ - (i * (i + 1)) / 2 + j;
}

double QuboMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("QUBO index out of range");
    if (i > j) return 0.0;
    return upper_[offset(i, j)];
}

void QuboMatrix::set(std::size_t i, std::size_t j, double value) {
    if (i >= n_ || j >= n_) throw std::out_of_range("QUBO index out of range");
    if (i > j) throw std::invalid_argument("QUBO matrix is upper triangular");
    upper_[offset(i, j)] = value;
}

void QuboMatrix::add(std::size_t i, std::size_t j, double delta) {
    if (i >= n_ || j >= n_) throw std::out_of_range("QUBO index out of range");
    if (i > j) throw std::invalid_argument("QUBO matrix is upper triangular");
    upper_[offset(i, j)] += delta;
}

std::vector<double> QuboMatrix::upper_entries() const { return upper_; }

void QuboMatrix::set_upper_entries(const std::vector<double>& values) {
    if (values.size() != upper_.size()) {
        throw std::invalid_argument("upper-triangle size mismatch");
    }
    upper_ = values;
}

double QuboMatrix::max_abs() const {
    double m = 0.0;
    for (double v : upper_) m = std::max(m, std::abs(v));
    return m;
}

double QuboMatrix::min_abs_nonzero() const {
    double m = 0.0;
    for (double v : upper_) {
        const double a = std::abs(v);
        if (a > 0.0 && (m == 0.0 || a < m)) m = a;
    }
    return m;
}

std::vector<std::vector<double>> QuboMatrix::to_rows() const {
    std::vector<std::vector<double>> rows(n_, std::vector<double>(n_, 0.0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) rows[i][j] = (*this)(i, j);
    return rows;
}

nlohmann::json to_json(const QuboMatrix& q) {
    return nlohmann::json{{"n", q.size()}, {"rows", q.to_rows()}};
}

QuboMatrix qubo_from_json(const nlohmann::json& j) {
    try {
        auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
        if (j.at("n").get<std::size_t>() != rows.size()) {
            throw InputError("matrix size field disagrees with row count");
        }
        return QuboMatrix::from_rows(rows);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed matrix: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("malformed matrix: ") + e.what());
    }
}

}  // namespace qaca
