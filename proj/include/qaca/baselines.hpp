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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qaca/dataset.hpp"

namespace qaca {

// ---------------------------------------------------------------------------
// Self-organizing feature map
// ---------------------------------------------------------------------------

struct SofmParams {
    std::size_t epochs = 100;
    double mu_start = 0.5;
    double mu_end = 0.01;
    std::optional<double> radius_start;  // defaults to m / 2
    double radius_end = 0.5;
};

/// Neurons on a line. Neuron i sits at lattice position i.
struct SofmModel {
    std::size_t dim = 0;
    std::vector<std::vector<double>> weights;
    std::vector<double> positions;
    double mu_start = 0.5;
    double mu_end = 0.01;
    double radius_start = 1.0;
    double radius_end = 0.5;
    std::size_t epochs = 100;
};

/// Geometric interpolation from `start` to `end` over `t_end` steps, evaluated
/// at step t + 1: start * (end / start)^((t + 1) / t_end).
/// Requires 0 <= t < t_end and start >= end > 0.
double sofm_decay(double start, double end, std::size_t t, std::size_t t_end);

/// Neuron whose weight vector is nearest to x (Euclidean); ties go to the lowest index.
std::size_t sofm_winner(const SofmModel& model, std::span<const double> x);

/// Moves every neuron toward x by mu * exp(-dist^2 / (2 r^2)), where dist is
/// the lattice distance to the winner. Neurons farther than r do not move.
void sofm_update(SofmModel& model, std::span<const double> x, std::size_t winner, double mu,
                 double radius);

/// Same, with mu and r taken from the model's schedules at epoch t.
void sofm_update(SofmModel& model, std::span<const double> x, std::size_t winner, std::size_t t);

/// m neurons, weights uniform inside each attribute's [min, max].
SofmModel sofm_init(const Dataset& ds, std::size_t m, const SofmParams& params, std::uint64_t seed);

/// Trains for `epochs` passes over shuffled data, then labels every instance
/// with the index of its winning neuron.
std::vector<int> sofm_cluster(const Dataset& ds, std::size_t m, const SofmParams& params,
                              std::uint64_t seed, SofmModel* trained = nullptr);

// ---------------------------------------------------------------------------
// k-means
// ---------------------------------------------------------------------------

struct KMeansParams {
    std::size_t max_iter = 300;
    std::size_t restarts = 10;
};

struct KMeansModel {
    std::vector<std::vector<double>> centroids;
    std::size_t iterations_run = 0;
    double inertia = 0.0;
    bool converged = false;
    /// Inertia after each assignment step of the kept restart.
    std::vector<double> inertia_history;
};

struct KMeansResult {
    std::vector<int> labels;
    KMeansModel model;
};

/// k-means++ seeding, then Lloyd iterations until the assignment stops
/// changing or max_iter is reached. An emptied cluster is re-seeded with the
/// point farthest from its centroid. The restart with the lowest inertia is
/// kept; restart r uses derive_seed(seed, r). Throws when m exceeds the
/// instance count.
KMeansResult kmeans_cluster(const Dataset& ds, std::size_t m, const KMeansParams& params,
                            std::uint64_t seed);

}  // namespace qaca
