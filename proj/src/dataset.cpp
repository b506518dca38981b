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

#include "qaca/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string_view>

#include "qaca/error.hpp"
#include "qaca/stats.hpp"

namespace qaca {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::string_view cell =
                std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos
                                                                                : comma - start);
        cells.emplace_back(trim(cell));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

bool parse_real(std::string_view text, double& out) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

}  // namespace

Dataset::Dataset(std::vector<double> values, std::size_t dim,
                 std::optional<std::vector<int>> labels,
                 std::vector<std::string> feature_names,
                 std::vector<std::string> class_names)
        : values_(std::move(values)),
          dim_(dim),
          labels_(std::move(labels)),
          feature_names_(std::move(feature_names)),
          class_names_(std::move(class_names)) {
    if (dim_ == 0) throw std::invalid_argument("dataset dimension must be positive");
    if (values_.empty()) throw std::invalid_argument("dataset is empty");
    if (values_.size() % dim_ != 0) throw std::invalid_argument("ragged dataset");
    rows_ = values_.size() / dim_;
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("dataset contains a non-finite value");
    }
    if (labels_) {
        if (labels_->size() != rows_) {
            throw std::invalid_argument("label count does not match instance count");
        }
        int max_label = -1;
        for (int l : *labels_) {
            if (l < 0) throw std::invalid_argument("labels must be non-negative");
            max_label = std::max(max_label, l);
        }
        if (class_names_.empty()) {
            for (int c = 0; c <= max_label; ++c) class_names_.push_back(std::to_string(c));
        } else if (static_cast<std::size_t>(max_label) >= class_names_.size()) {
            throw std::invalid_argument("label outside the class-name table");
        }
    } else if (!class_names_.empty()) {
        throw std::invalid_argument("class names given without labels");
    }
    if (feature_names_.empty()) {
        for (std::size_t c = 0; c < dim_; ++c) feature_names_.push_back("x" + std::to_string(c));
    } else if (feature_names_.size() != dim_) {
        throw std::invalid_argument("feature name count does not match dimension");
    }

    stats_.resize(dim_);
    std::vector<double> column(rows_);
    for (std::size_t c = 0; c < dim_; ++c) {
        for (std::size_t r = 0; r < rows_; ++r) column[r] = values_[r * dim_ + c];
        const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
        const MeanStd ms = mean_std(column);
        stats_[c] = {*lo, *hi, ms.mean, ms.std};
    }
}

Instance Dataset::instance(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("instance index out of range");
    return {std::span<const double>(values_).subspan(i * dim_, dim_), i};
}

Dataset load_csv(const std::filesystem::path& path, const std::optional<std::string>& label_column) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open dataset file '" + path.string() + "'");

    std::string line;
    if (!std::getline(in, line)) throw InputError("dataset file '" + path.string() + "' is empty");
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    const std::vector<std::string> header = split_row(line);

    std::optional<std::size_t> label_idx;
    if (label_column) {
        const auto it = std::find(header.begin(), header.end(), *label_column);
        if (it == header.end()) {
            throw InputError("label column '" + *label_column + "' not found in header");
        }
        label_idx = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<std::string> feature_names;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c != label_idx) feature_names.push_back(header[c]);
    }
    if (feature_names.empty()) throw InputError("dataset has no feature columns");

    std::vector<double> values;
    std::vector<int> labels;
    std::vector<std::string> class_names;
    std::map<std::string, int> class_ids;

    std::size_t row = 1;  // 1-based data row; header is row 0
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            ++row;
            continue;
        }
        const std::vector<std::string> cells = split_row(line);
        if (cells.size() != header.size()) {
            throw InputError("row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                             " cells, expected " + std::to_string(header.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c == label_idx) {
                auto [it, inserted] =
                        class_ids.emplace(cells[c], static_cast<int>(class_names.size()));
                if (inserted) class_names.push_back(cells[c]);
                labels.push_back(it->second);
                continue;
            }
            double v = 0.0;
            if (!parse_real(cells[c], v)) {
                throw InputError("row " + std::to_string(row) + ", column '" + header[c] +
                                 "': '" + cells[c] + "' is not a finite number");
            }
            values.push_back(v);
        }
        ++row;
    }
    if (values.empty()) throw InputError("dataset file '" + path.string() + "' has no data rows");

    std::optional<std::vector<int>> maybe_labels;
    if (label_idx) maybe_labels = std::move(labels);
    const std::size_t dim = feature_names.size();
    return Dataset(std::move(values), dim, std::move(maybe_labels), std::move(feature_names),
                   std::move(class_names));
}

std::pair<double, double> global_min_max(const Dataset& ds) {
    const auto values = ds.values();
    if (values.empty()) throw std::invalid_argument("empty dataset");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, *hi};
}

Dataset standardize_features(const Dataset& ds) {
    const std::size_t n = ds.size();
    const std::size_t d = ds.dim();
    std::vector<double> out(ds.values().begin(), ds.values().end());
    std::vector<double> column(n);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < n; ++r) column[r] = out[r * d + c];
        standardize_in_place(column);
        for (std::size_t r = 0; r < n; ++r) out[r * d + c] = column[r];
    }
    return Dataset(std::move(out), d, ds.labels(), ds.feature_names(),
                   ds.labels() ? ds.class_names() : std::vector<std::string>{});
}

}  // namespace qaca
