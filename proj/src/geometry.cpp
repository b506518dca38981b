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

#include "qaca/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qaca/error.hpp"
#include "qaca/random.hpp"
#include "qaca/schema.hpp"

namespace qaca {

std::span<const double> ClusterGeometry::vertex(std::size_t cluster, std::size_t v) const {
    if (cluster >= m || v >= n_v) throw std::out_of_range("vertex index out of range");
    return std::span<const double>(vertices).subspan((cluster * n_v + v) * d, d);
}

std::array<Point3, 4> tetrahedron_from_centroid(const Point3& c, double dist) {
    if (!(dist > 0.0)) throw std::invalid_argument("tetrahedron distance must be positive");
    const auto [x, y, z] = c;
    return {{
            {x, y, z + dist},
            {x - dist, y - dist, z - dist},
            {x + dist, y - dist, z - dist},
            {x, y + dist, z - dist},
    }};
}

RangeSchedule init_schedule(const Dataset& ds, std::size_t m) {
    if (m < 2) throw std::invalid_argument("cluster count must be at least 2");
    const auto [lo, hi] = global_min_max(ds);
    if (!(hi > lo)) {
        throw std::invalid_argument("degenerate dataset: every attribute value is equal");
    }
    RangeSchedule s;
    s.start = lo;
    s.increment = (hi - lo) / static_cast<double>(m);
    s.r_min = s.start;
    s.r_max = s.r_min + s.increment;
    return s;
}

ClusterGeometry random_polygon_clusters(const RangeSchedule& schedule, std::size_t m,
                                        std::size_t n_v, std::size_t d, double epsilon,
                                        std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("cluster count must be at least 2");
    if (n_v < 1) throw std::invalid_argument("vertices per cluster must be at least 1");
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("sliding factor must be finite and non-negative");
    }
    if (!(schedule.r_max > schedule.r_min)) {
        throw std::invalid_argument("range schedule must have r_max > r_min");
    }

    ClusterGeometry g;
    g.m = m;
    g.n_v = n_v;
    g.d = d;
    g.epsilon = epsilon;
    g.seed = seed;
    g.vertices.reserve(qubit_count(m, n_v, d));

    Rng rng(seed);
    double r_min = schedule.r_min;
    double r_max = schedule.r_max;
    const double shift = schedule.increment * epsilon;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t v = 0; v < n_v; ++v) {
            for (std::size_t c = 0; c < d; ++c) g.vertices.push_back(uniform(rng, r_min, r_max));
        }
        r_min += shift;
        r_max += shift;
    }
    return g;
}

std::size_t qubit_count(std::size_t m, std::size_t n_v, std::size_t d) { return m * n_v * d; }

nlohmann::json to_json(const ClusterGeometry& g) {
    nlohmann::json clusters = nlohmann::json::array();
    for (std::size_t k = 0; k < g.m; ++k) {
        nlohmann::json verts = nlohmann::json::array();
        for (std::size_t v = 0; v < g.n_v; ++v) {
            const auto p = g.vertex(k, v);
            verts.push_back(std::vector<double>(p.begin(), p.end()));
        }
        clusters.push_back(std::move(verts));
    }
    return {{"schema_version", kSchemaVersion},
            {"kind", "geometry"},
            {"m", g.m},
            {"n_v", g.n_v},
            {"d", g.d},
            {"epsilon", g.epsilon},
            {"seed", g.seed},
            {"vertices", std::move(clusters)}};
}

ClusterGeometry geometry_from_json(const nlohmann::json& j) {
    try {
        check_schema(j, "geometry");
        ClusterGeometry g;
        g.m = j.at("m").get<std::size_t>();
        g.n_v = j.at("n_v").get<std::size_t>();
        g.d = j.at("d").get<std::size_t>();
        g.epsilon = j.at("epsilon").get<double>();
        g.seed = j.at("seed").get<std::uint64_t>();
        if (g.m < 2 || g.n_v < 1 || g.d < 1) throw InputError("geometry: invalid m, n_v or d");
        const auto& clusters = j.at("vertices");
        if (!clusters.is_array() || clusters.size() != g.m) {
            throw InputError("geometry: expected " + std::to_string(g.m) + " clusters");
        }
        for (const auto& verts : clusters) {
            if (!verts.is_array() || verts.size() != g.n_v) {
                throw InputError("geometry: wrong vertex count in a cluster");
            }
            for (const auto& p : verts) {
                auto coords = p.get<std::vector<double>>();
                if (coords.size() != g.d) throw InputError("geometry: wrong vertex dimension");
                for (double x : coords) {
                    if (!std::isfinite(x)) throw InputError("geometry: non-finite coordinate");
                    g.vertices.push_back(x);
                }
            }
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("geometry: ") + e.what());
    }
}

}  // namespace qaca
