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

#include "qaca/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "qaca/random.hpp"

namespace qaca {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;
}

std::size_t nearest(const std::vector<std::vector<double>>& centers, std::span<const double> x) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c) {
        const double d = squared_distance(centers[c], x);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// SOFM

double sofm_decay(double start, double end, std::size_t t, std::size_t t_end) {
    if (!(end > 0.0) || !(start >= end)) {
        throw std::invalid_argument("decay endpoints must satisfy start >= end > 0");
    }
    if (t >= t_end) throw std::invalid_argument("decay step must be below the final step");
    const double exponent = static_cast<double>(t + 1) / static_cast<double>(t_end);
    return start * std::pow(end / start, exponent);
}

std::size_t sofm_winner(const SofmModel& model, std::span<const double> x) {
    if (x.size() != model.dim) throw std::invalid_argument("instance dimension does not match the map");
    if (model.weights.empty()) throw std::invalid_argument("map has no neurons");
    return nearest(model.weights, x);
}

void sofm_update(SofmModel& model, std::span<const double> x, std::size_t winner, double mu,
                 double radius) {
    if (winner >= model.weights.size()) throw std::out_of_range("winner index out of range");
    if (x.size() != model.dim) throw std::invalid_argument("instance dimension does not match the map");
    const double center = model.positions[winner];
    for (std::size_t i = 0; i < model.weights.size(); ++i) {
        const double dist = std::abs(model.positions[i] - center);
        if (dist > radius) continue;
        const double phi = std::exp(-(dist * dist) / (2.0 * radius * radius));
        const double rate = mu * phi;
        auto& w = model.weights[i];
        for (std::size_t c = 0; c < model.dim; ++c) w[c] += rate * (x[c] - w[c]);
    }
}

void sofm_update(SofmModel& model, std::span<const double> x, std::size_t winner, std::size_t t) {
    const double mu = sofm_decay(model.mu_start, model.mu_end, t, model.epochs);
    const double radius = sofm_decay(model.radius_start, model.radius_end, t, model.epochs);
    sofm_update(model, x, winner, mu, radius);
}

SofmModel sofm_init(const Dataset& ds, std::size_t m, const SofmParams& params, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("SOFM needs at least 2 neurons");
    if (params.epochs < 1) throw std::invalid_argument("SOFM needs at least one epoch");
    SofmModel model;
    model.dim = ds.dim();
    model.mu_start = params.mu_start;
    model.mu_end = params.mu_end;
    model.radius_start = params.radius_start.value_or(static_cast<double>(m) / 2.0);
    model.radius_end = params.radius_end;
    model.epochs = params.epochs;
    // fail early on bad schedules
    sofm_decay(model.mu_start, model.mu_end, 0, model.epochs);
    sofm_decay(model.radius_start, model.radius_end, 0, model.epochs);

    Rng rng(seed);
    const auto& stats = ds.attribute_stats();
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> w(model.dim);
        for (std::size_t c = 0; c < model.dim; ++c) {
            w[c] = stats[c].max > stats[c].min ? uniform(rng, stats[c].min, stats[c].max)
                                               : stats[c].min;
        }
        model.weights.push_back(std::move(w));
        model.positions.push_back(static_cast<double>(i));
    }
    return model;
}

std::vector<int> sofm_cluster(const Dataset& ds, std::size_t m, const SofmParams& params,
                              std::uint64_t seed, SofmModel* trained) {
    SofmModel model = sofm_init(ds, m, params, seed);
    Rng rng(derive_seed(seed, 1));
    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t t = 0; t < model.epochs; ++t) {
        shuffle(std::span<std::size_t>(order), rng);
        for (std::size_t idx : order) {
            const auto x = ds.instance(idx).coords;
            sofm_update(model, x, sofm_winner(model, x), t);
        }
    }
    std::vector<int> labels(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        labels[i] = static_cast<int>(sofm_winner(model, ds.instance(i).coords));
    }
    if (trained) *trained = std::move(model);
    return labels;
}

// ---------------------------------------------------------------------------
// k-means

namespace {

std::vector<std::vector<double>> kmeans_plus_plus(const Dataset& ds, std::size_t m, Rng& rng) {
    const std::size_t n = ds.size();
    std::vector<std::vector<double>> centers;
    const auto first = ds.instance(uniform_index(rng, n)).coords;
    centers.emplace_back(first.begin(), first.end());
    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(centers[0], ds.instance(i).coords);
    while (centers.size() < m) {
        const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
        std::size_t pick = 0;
        if (total > 0.0) {
            const double target = uniform01(rng) * total;
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += d2[i];
                if (acc > target && d2[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = uniform_index(rng, n);
        }
        const auto p = ds.instance(pick).coords;
        centers.emplace_back(p.begin(), p.end());
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], squared_distance(centers.back(), ds.instance(i).coords));
        }
    }
    return centers;
}

KMeansResult lloyd(const Dataset& ds, std::vector<std::vector<double>> centers,
                   std::size_t max_iter) {
    const std::size_t n = ds.size();
    const std::size_t m = centers.size();
    const std::size_t d = ds.dim();
    KMeansResult r;
    r.labels.assign(n, -1);

    auto assign = [&]() {
        bool changed = false;
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = ds.instance(i).coords;
            const int c = static_cast<int>(nearest(centers, x));
            if (c != r.labels[i]) changed = true;
            r.labels[i] = c;
            inertia += squared_distance(centers[c], x);
        }
        r.model.inertia = inertia;
        r.model.inertia_history.push_back(inertia);
        return changed;
    };

    assign();
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        ++r.model.iterations_run;
        std::vector<std::vector<double>> sums(m, std::vector<double>(d, 0.0));
        std::vector<std::size_t> counts(m, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = ds.instance(i).coords;
            auto& s = sums[r.labels[i]];
            for (std::size_t c = 0; c < d; ++c) s[c] += x[c];
            ++counts[r.labels[i]];
        }
        for (std::size_t k = 0; k < m; ++k) {
            if (counts[k] == 0) continue;
            for (std::size_t c = 0; c < d; ++c) centers[k][c] = sums[k][c] / static_cast<double>(counts[k]);
        }
        for (std::size_t k = 0; k < m; ++k) {
            if (counts[k] != 0) continue;
            // re-seed with the point worst served by its current centroid
            std::size_t far = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double dd = squared_distance(centers[r.labels[i]], ds.instance(i).coords);
                if (dd > far_d) {
                    far_d = dd;
                    far = i;
                }
            }
            const auto p = ds.instance(far).coords;
            centers[k].assign(p.begin(), p.end());
            r.labels[far] = static_cast<int>(k);
        }
        if (!assign()) {
            r.model.converged = true;
            break;
        }
    }
    r.model.centroids = std::move(centers);
    return r;
}

}  // namespace

KMeansResult kmeans_cluster(const Dataset& ds, std::size_t m, const KMeansParams& params,
                            std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("k-means needs at least one cluster");
    if (m > ds.size()) throw std::invalid_argument("more clusters than instances");
    if (params.restarts < 1) throw std::invalid_argument("k-means needs at least one restart");
    std::optional<KMeansResult> best;
    for (std::size_t r = 0; r < params.restarts; ++r) {
        Rng rng(derive_seed(seed, r));
        KMeansResult candidate = lloyd(ds, kmeans_plus_plus(ds, m, rng), params.max_iter);
        if (!best || candidate.model.inertia < best->model.inertia) best = std::move(candidate);
    }
    return std::move(*best);
}

}  // namespace qaca
