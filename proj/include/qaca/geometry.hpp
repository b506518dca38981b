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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"
#include "qaca/dataset.hpp"

namespace qaca {

using Point3 = std::array<double, 3>;

/// Coordinate range used to draw cluster vertices, and the amount it slides
/// between consecutive clusters.
struct RangeSchedule {
    double start = 0.0;      // lowest attribute value in the data
    double increment = 0.0;  // data range divided by the cluster count
    double r_min = 0.0;
    double r_max = 0.0;
};

/// m clusters, each a polygon of n_v vertices in d dimensions.
struct ClusterGeometry {
    std::size_t m = 0;
    std::size_t n_v = 0;
    std::size_t d = 0;
    double epsilon = 1.0;
    std::uint64_t seed = 0;
    /// Flattened cluster-major, then vertex, then coordinate.
    std::vector<double> vertices;

    std::span<const double> vertex(std::size_t cluster, std::size_t v) const;

    friend bool operator==(const ClusterGeometry&, const ClusterGeometry&) = default;
};

/// Four tetrahedron vertices placed around `centroid` at offset `dist`:
/// apex above, then three base corners below. Throws when dist <= 0.
std::array<Point3, 4> tetrahedron_from_centroid(const Point3& centroid, double dist);

/// Starts the vertex range at the global minimum of the data, with width
/// (max - min) / m. Throws when m < 2 or every attribute value is equal.
RangeSchedule init_schedule(const Dataset& ds, std::size_t m);

/// Draws m typeless polygons. For each cluster in turn, every coordinate of
/// every vertex is uniform in [r_min, r_max); after the cluster is complete
/// both bounds slide up by increment * epsilon.
///
/// Draw order is cluster-major, vertex next, coordinate last, from a
/// std::mt19937_64 seeded with `seed` (see random.hpp for the real mapping).
ClusterGeometry random_polygon_clusters(const RangeSchedule& schedule, std::size_t m,
                                        std::size_t n_v, std::size_t d, double epsilon,
                                        std::uint64_t seed);

/// Qubits needed to encode m clusters of n_v vertices in d dimensions.
std::size_t qubit_count(std::size_t m, std::size_t n_v, std::size_t d);

nlohmann::json to_json(const ClusterGeometry& g);
ClusterGeometry geometry_from_json(const nlohmann::json& j);

}  // namespace qaca
