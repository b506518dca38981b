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
#include <string>
#include <vector>

#include "json.hpp"
#include "qaca/geometry.hpp"
#include "qaca/qubo.hpp"

namespace qaca {

/// Qubit lookup tables.
///
/// `values[q]` is the vertex coordinate encoded by qubit q (one qubit per
/// coordinate, so there are m * n_v * d qubits). `clusters[k]` lists the
/// qubits of cluster k: a contiguous ascending block of n_v * d IDs.
struct LookupTables {
    std::vector<double> values;
    std::vector<std::vector<std::size_t>> clusters;
    std::size_t dim = 0;  // attribute count the coordinates belong to

    std::size_t qubit_count() const noexcept { return values.size(); }
    std::size_t cluster_count() const noexcept { return clusters.size(); }
    /// Cluster that owns qubit q.
    std::size_t cluster_of(std::size_t q) const;

    friend bool operator==(const LookupTables&, const LookupTables&) = default;
};

/// How same-cluster entries of the base matrix are filled.
enum class IntraMode {
    SqrtCoupling,  // -sqrt(L_i^2 + L_j^2)
    Zero,          // left at 0
};

std::string to_string(IntraMode mode);
IntraMode intra_mode_from_string(const std::string& s);

/// The instance-independent base QUBO plus the tables that index it.
struct ClusterForm {
    QuboMatrix base;
    LookupTables tables;
    IntraMode intra_mode = IntraMode::SqrtCoupling;
};

/// Flattens the geometry into L and D. With `scale_values` the whole of L is
/// standardized to mean 0 / unit variance.
LookupTables build_lookup_tables(const ClusterGeometry& geometry, bool scale_values);

/// Starting from zero, every pair i <= j gets -sqrt(L_i^2 + L_j^2) when both
/// qubits share a cluster (or stays 0 in IntraMode::Zero) and
/// +sqrt(L_i^2 + L_j^2) otherwise. The diagonal counts as same-cluster.
ClusterForm build_cluster_form(const LookupTables& tables, IntraMode mode);

nlohmann::json to_json(const LookupTables& t);
LookupTables lookup_tables_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClusterForm& cf);
ClusterForm cluster_form_from_json(const nlohmann::json& j);

}  // namespace qaca
