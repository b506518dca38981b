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

#include "qaca/cluster_form.hpp"

#include <cmath>
#include <stdexcept>

#include "qaca/error.hpp"
#include "qaca/schema.hpp"
#include "qaca/stats.hpp"

namespace qaca {

std::size_t LookupTables::cluster_of(std::size_t q) const {
    if (q >= qubit_count()) throw std::out_of_range("qubit index out of range");
    // blocks are contiguous and equally sized
    const std::size_t block = qubit_count() / cluster_count();
    return q / block;
}

std::string to_string(IntraMode mode) {
    return mode == IntraMode::SqrtCoupling ? "sqrt_coupling" : "zero";
}

IntraMode intra_mode_from_string(const std::string& s) {
    if (s == "sqrt_coupling") return IntraMode::SqrtCoupling;
    if (s == "zero") return IntraMode::Zero;
    throw std::invalid_argument("unknown intra mode '" + s + "' (expected sqrt_coupling or zero)");
}

LookupTables build_lookup_tables(const ClusterGeometry& geometry, bool scale_values) {
    if (geometry.vertices.size() != qubit_count(geometry.m, geometry.n_v, geometry.d) ||
        geometry.m == 0) {
        throw std::invalid_argument("geometry vertex count does not match m * n_v * d");
    }
    LookupTables t;
    t.dim = geometry.d;
    t.values = geometry.vertices;
    if (scale_values) standardize_in_place(t.values);

    const std::size_t block = geometry.n_v * geometry.d;
    t.clusters.resize(geometry.m);
    for (std::size_t k = 0; k < geometry.m; ++k) {
        t.clusters[k].reserve(block);
        for (std::size_t q = k * block; q < (k + 1) * block; ++q) t.clusters[k].push_back(q);
    }
    return t;
}

ClusterForm build_cluster_form(const LookupTables& tables, IntraMode mode) {
    const std::size_t n = tables.qubit_count();
    ClusterForm cf{QuboMatrix(n), tables, mode};
    const auto& L = tables.values;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ki = tables.cluster_of(i);
        for (std::size_t j = i; j < n; ++j) {
            const double coupling = std::sqrt(L[i] * L[i] + L[j] * L[j]);
            if (tables.cluster_of(j) == ki) {
                if (mode == IntraMode::SqrtCoupling) cf.base.add(i, j, -coupling);
            } else {
                cf.base.add(i, j, coupling);
            }
        }
    }
    return cf;
}

nlohmann::json to_json(const LookupTables& t) {
    nlohmann::json d = nlohmann::json::object();
    for (std::size_t k = 0; k < t.clusters.size(); ++k) d[std::to_string(k)] = t.clusters[k];
    return {{"L", t.values}, {"D", std::move(d)}, {"dim", t.dim}};
}

LookupTables lookup_tables_from_json(const nlohmann::json& j) {
    try {
        LookupTables t;
        t.values = j.at("L").get<std::vector<double>>();
        t.dim = j.at("dim").get<std::size_t>();
        const auto& d = j.at("D");
        if (!d.is_object() || d.empty()) throw InputError("lookup tables: D must be a non-empty object");
        t.clusters.resize(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) {
            const std::string key = std::to_string(k);
            if (!d.contains(key)) throw InputError("lookup tables: D is missing cluster " + key);
            t.clusters[k] = d[key].get<std::vector<std::size_t>>();
        }
        // D must partition 0..N-1 into equal contiguous ascending blocks
        const std::size_t n = t.values.size();
        if (n == 0 || n % t.clusters.size() != 0 || t.dim == 0) {
            throw InputError("lookup tables: qubit count does not split into equal clusters");
        }
        const std::size_t block = n / t.clusters.size();
        if (block % t.dim != 0) throw InputError("lookup tables: cluster size is not a multiple of dim");
        for (std::size_t k = 0; k < t.clusters.size(); ++k) {
            if (t.clusters[k].size() != block) throw InputError("lookup tables: uneven cluster sizes");
            for (std::size_t i = 0; i < block; ++i) {
                if (t.clusters[k][i] != k * block + i) {
                    throw InputError("lookup tables: D is not a contiguous partition");
                }
            }
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("lookup tables: ") + e.what());
    }
}

nlohmann::json to_json(const ClusterForm& cf) {
    return {{"schema_version", kSchemaVersion},
            {"kind", "cluster_form"},
            {"intra_mode", to_string(cf.intra_mode)},
            {"tables", to_json(cf.tables)},
            {"matrix", to_json(cf.base)}};
}

ClusterForm cluster_form_from_json(const nlohmann::json& j) {
    check_schema(j, "cluster_form");
    try {
        ClusterForm cf;
        cf.intra_mode = intra_mode_from_string(j.at("intra_mode").get<std::string>());
        cf.tables = lookup_tables_from_json(j.at("tables"));
        cf.base = qubo_from_json(j.at("matrix"));
        if (cf.base.size() != cf.tables.qubit_count()) {
            throw InputError("cluster form: matrix size does not match the lookup tables");
        }
        return cf;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("cluster form: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("cluster form: ") + e.what());
    }
}

}  // namespace qaca
