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
#include <vector>

#include "qaca/dataset.hpp"
#include "qaca/qubo.hpp"

namespace qaca::testing {

/// Isotropic Gaussian blobs, `per_blob` points each, labelled by blob.
Dataset make_blobs(const std::vector<std::vector<double>>& centers, double sigma,
                   std::size_t per_blob, std::uint64_t seed);

/// Two blobs `separation` sigmas apart along the main diagonal of `dim` space.
Dataset diagonal_blobs(std::size_t dim, double sigma, double separation, std::size_t per_blob,
                       std::uint64_t seed);

/// Dense upper-triangular QUBO with entries uniform in [lo, hi).
QuboMatrix random_qubo(std::size_t n, std::uint64_t seed, double lo = -1.0, double hi = 1.0);

std::filesystem::path iris_path();

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

 private:
    std::filesystem::path path_;
};

}  // namespace qaca::testing
