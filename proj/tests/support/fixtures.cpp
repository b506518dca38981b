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

#include "fixtures.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <system_error>
#include <unistd.h>

#include "qaca/random.hpp"

namespace qaca::testing {

Dataset make_blobs(const std::vector<std::vector<double>>& centers, double sigma,
                   std::size_t per_blob, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t dim = centers.front().size();
    std::vector<double> values;
    std::vector<int> labels;
    for (std::size_t b = 0; b < centers.size(); ++b) {
        for (std::size_t i = 0; i < per_blob; ++i) {
            for (std::size_t c = 0; c < dim; ++c) values.push_back(centers[b][c] + sigma * standard_normal(rng));
            labels.push_back(static_cast<int>(b));
        }
    }
    std::vector<std::string> classes;
    for (std::size_t b = 0; b < centers.size(); ++b) classes.push_back("blob" + std::to_string(b));
    return Dataset(std::move(values), dim, std::move(labels), {}, std::move(classes));
}

Dataset diagonal_blobs(std::size_t dim, double sigma, double separation, std::size_t per_blob,
                       std::uint64_t seed) {
    const double step = separation * sigma / std::sqrt(static_cast<double>(dim));
    return make_blobs({std::vector<double>(dim, 0.0), std::vector<double>(dim, step)}, sigma,
                      per_blob, seed);
}

QuboMatrix random_qubo(std::size_t n, std::uint64_t seed, double lo, double hi) {
    Rng rng(seed);
    QuboMatrix q(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) q.set(i, j, uniform(rng, lo, hi));
    }
    return q;
}

std::filesystem::path iris_path() { return std::filesystem::path(QACA_DATA_DIR) / "iris.csv"; }

TempDir::TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("qaca-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

}  // namespace qaca::testing
