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

#include "qaca/icm.hpp"

#include <stdexcept>

#include "qaca/error.hpp"
#include "qaca/schema.hpp"
#include "qaca/stats.hpp"

namespace qaca {

std::string to_string(DistanceMode mode) {
    return mode == DistanceMode::SubtractSquare ? "subtract_square" : "squared_euclidean";
}

DistanceMode distance_mode_from_string(const std::string& s) {
    if (s == "subtract_square") return DistanceMode::SubtractSquare;
    if (s == "squared_euclidean") return DistanceMode::SquaredEuclidean;
    throw std::invalid_argument("unknown distance mode '" + s +
                                "' (expected subtract_square or squared_euclidean)");
}

std::vector<double> update_values_for_instance(const LookupTables& tables,
                                               std::span<const double> coords,
                                               DistanceMode mode) {
    if (coords.size() != tables.dim || tables.dim == 0) {
        throw std::invalid_argument("instance has " + std::to_string(coords.size()) +
                                    " attributes, cluster form expects " +
                                    std::to_string(tables.dim));
    }
    std::vector<double> out = tables.values;
    for (const auto& qubits : tables.clusters) {
        std::size_t cc = 0;
        for (std::size_t q : qubits) {
            const double x = coords[cc];
            if (mode == DistanceMode::SubtractSquare) {
                out[q] = out[q] - x * x;
            } else {
                const double diff = out[q] - x;
                out[q] = diff * diff;
            }
            if (++cc == tables.dim) cc = 0;
        }
    }
    return out;
}

QuboMatrix build_icm(const ClusterForm& cf, std::span<const double> L) {
    const std::size_t n = cf.base.size();
    if (L.size() != n) throw std::invalid_argument("instance values do not match the qubit count");
    QuboMatrix q = cf.base;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ki = cf.tables.cluster_of(i);
        q.add(i, i, -L[i] * L[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double coupling = L[i] * L[i] + L[j] * L[j];
            q.add(i, j, cf.tables.cluster_of(j) == ki ? -coupling : coupling);
        }
        // a qubit never belongs to two clusters, so there is no cross-cluster diagonal term
    }
    return q;
}

QuboMatrix scale_matrix(QuboMatrix q) {
    std::vector<double> upper = q.upper_entries();
    standardize_in_place(upper);
    q.set_upper_entries(upper);
    return q;
}

InstanceClusterMatrix feed_instance(const ClusterForm& cf, const Instance& inst,
                                    DistanceMode mode) {
    InstanceClusterMatrix icm;
    icm.values = update_values_for_instance(cf.tables, inst.coords, mode);
    icm.q = scale_matrix(build_icm(cf, icm.values));
    icm.instance_index = inst.index;
    return icm;
}

nlohmann::json to_json(const InstanceClusterMatrix& icm) {
    return {{"schema_version", kSchemaVersion},
            {"kind", "icm"},
            {"instance_index", icm.instance_index},
            {"L", icm.values},
            {"matrix", to_json(icm.q)}};
}

InstanceClusterMatrix icm_from_json(const nlohmann::json& j) {
    check_schema(j, "icm");
    try {
        InstanceClusterMatrix icm;
        icm.instance_index = j.at("instance_index").get<std::size_t>();
        icm.values = j.at("L").get<std::vector<double>>();
        icm.q = qubo_from_json(j.at("matrix"));
        if (icm.q.size() != icm.values.size()) {
            throw InputError("icm: matrix size does not match L");
        }
        return icm;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("icm: ") + e.what());
    }
}

}  // namespace qaca
