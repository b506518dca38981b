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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qaca {

struct AttributeStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double std = 0.0;  // population
};

/// Non-owning view of one row of a Dataset.
struct Instance {
    std::span<const double> coords;
    std::size_t index = 0;
};

/// Immutable matrix of real-valued instances with optional class labels.
///
/// Labels are carried for scoring only; nothing on the clustering path reads them.
class Dataset {
 public:
    /// `values` is row-major, `values.size() / dim` rows. Throws
    /// std::invalid_argument on empty data, ragged size, non-finite values or
    /// a label count that does not match the row count.
    Dataset(std::vector<double> values, std::size_t dim,
            std::optional<std::vector<int>> labels = std::nullopt,
            std::vector<std::string> feature_names = {},
            std::vector<std::string> class_names = {});

    std::size_t size() const noexcept { return rows_; }
    std::size_t dim() const noexcept { return dim_; }

    Instance instance(std::size_t i) const;
    std::span<const double> values() const noexcept { return values_; }

    const std::optional<std::vector<int>>& labels() const noexcept { return labels_; }
    std::size_t num_classes() const noexcept { return class_names_.size(); }
    const std::vector<std::string>& class_names() const noexcept { return class_names_; }
    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }

    const std::vector<AttributeStats>& attribute_stats() const noexcept { return stats_; }

 private:
    std::vector<double> values_;
    std::size_t dim_ = 0;
    std::size_t rows_ = 0;
    std::optional<std::vector<int>> labels_;
    std::vector<std::string> feature_names_;
    std::vector<std::string> class_names_;
    std::vector<AttributeStats> stats_;
};

/// Reads a header-first, comma-separated file. Every column except
/// `label_column` must hold finite reals. Labels are mapped to 0..c-1 in order
/// of first appearance. Throws InputError naming the row and column of any
/// offending cell.
Dataset load_csv(const std::filesystem::path& path,
                 const std::optional<std::string>& label_column = std::nullopt);

/// Smallest and largest value over every cell of the attribute matrix.
std::pair<double, double> global_min_max(const Dataset& ds);

/// Per-column standardization to mean 0 and unit population variance;
/// zero-variance columns are only centered. Labels and names are kept.
Dataset standardize_features(const Dataset& ds);

}  // namespace qaca
