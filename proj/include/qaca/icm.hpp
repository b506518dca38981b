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
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaca/cluster_form.hpp"
#include "qaca/dataset.hpp"
#include "qaca/qubo.hpp"

namespace qaca {

/// How an instance coordinate x is folded into a qubit value L.
enum class DistanceMode {
    SubtractSquare,    // L - x^2
    SquaredEuclidean,  // (L - x)^2
};

std::string to_string(DistanceMode mode);
DistanceMode distance_mode_from_string(const std::string& s);

/// A cluster form after one instance has been fed into it.
struct InstanceClusterMatrix {
    QuboMatrix q;                       // scaled, ready to solve
    std::vector<double> values;         // per-instance copy of L
    std::size_t instance_index = 0;
};

/// Per-instance copy of L. Walking the clusters in order and the qubits of
/// each cluster in order, qubit q is combined with coordinate cc of the
/// instance, where cc counts 0..d-1 and wraps, restarting at every cluster.
/// The tables are not modified. Throws on a dimension mismatch.
std::vector<double> update_values_for_instance(const LookupTables& tables,
                                               std::span<const double> coords,
                                               DistanceMode mode = DistanceMode::SubtractSquare);

/// Unscaled instance-cluster matrix: a copy of the base with, for every pair
/// i <= j, -(L_i^2 + L_j^2) added for same-cluster off-diagonal pairs, -L_i^2
/// on the diagonal, and +(L_i^2 + L_j^2) for pairs in different clusters.
QuboMatrix build_icm(const ClusterForm& cf, std::span<const double> instance_values);

/// Standardizes all i <= j entries jointly; the lower triangle stays 0.
QuboMatrix scale_matrix(QuboMatrix q);

/// update_values_for_instance, build_icm, scale_matrix in sequence.
InstanceClusterMatrix feed_instance(const ClusterForm& cf, const Instance& inst,
                                    DistanceMode mode = DistanceMode::SubtractSquare);

nlohmann::json to_json(const InstanceClusterMatrix& icm);
InstanceClusterMatrix icm_from_json(const nlohmann::json& j);

}  // namespace qaca
