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
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaca/baselines.hpp"
#include "qaca/cluster_form.hpp"
#include "qaca/dataset.hpp"
#include "qaca/geometry.hpp"
#include "qaca/icm.hpp"
#include "qaca/readout.hpp"
#include "qaca/solver.hpp"

namespace qaca {

inline constexpr std::size_t kMaxPermutationClasses = 8;

struct PermutationMatch {
    double accuracy = 0.0;
    std::size_t correct = 0;
    /// mapping[cluster] = class the cluster is matched to.
    std::vector<std::size_t> mapping;
};

/// Best accuracy over every bijection between the m cluster IDs and the m
/// class IDs. Both label sequences must hold values in [0, m). Throws on a
/// length mismatch, an out-of-range label, or m above kMaxPermutationClasses.
PermutationMatch permutation_accuracy(std::span<const int> predicted, std::span<const int> truth,
                                      std::size_t m);

/// Everything that shapes one clustering run apart from the seed.
struct QacaConfig {
    std::size_t m = 3;
    std::size_t n_v = 1;
    double epsilon = 1.0;
    IntraMode intra_mode = IntraMode::SqrtCoupling;
    DistanceMode distance_mode = DistanceMode::SubtractSquare;
    bool scale_values = false;
    bool standardize_features = false;
    SolverOptions solver;
};

nlohmann::json to_json(const QacaConfig& c);

/// Artifacts of one seeded run, kept for dumps and inspection.
struct QacaRun {
    std::uint64_t seed = 0;
    ClusterGeometry geometry;
    ClusterForm form;
    std::vector<SolveResult> results;
    std::vector<Assignment> assignments;
    std::vector<int> labels;
    std::vector<InstanceClusterMatrix> icms;  // only with keep_icms
};

/// Geometry from `seed`, one cluster form, then feed/solve/read out every
/// instance. Instance i is solved with derive_seed(seed, i + 1).
QacaRun run_qaca(const Dataset& ds, const QacaConfig& config, std::uint64_t seed,
                 bool keep_icms = false);

struct RunRecord {
    std::uint64_t seed = 0;
    double accuracy = 0.0;
    std::size_t correct = 0;
    double seconds = 0.0;  // wall clock; not part of the JSON report
    std::vector<int> labels;
};

struct RunReport {
    std::string algorithm;
    std::size_t total = 0;
    std::vector<RunRecord> runs;
    double mean_accuracy = 0.0;
    double best_accuracy = 0.0;
    nlohmann::json config;
    bool published_only = false;
};

/// One QACA run per seed, scored against the dataset labels. `runs`, when
/// given, receives each run's artifacts.
RunReport run_qaca_experiment(const Dataset& ds, const QacaConfig& config,
                              std::span<const std::uint64_t> seeds,
                              std::vector<QacaRun>* runs = nullptr, bool keep_icms = false);

enum class Baseline { KMeans, Sofm };

std::string to_string(Baseline b);

struct BaselineConfig {
    std::size_t m = 3;
    bool standardize_features = false;
    KMeansParams kmeans;
    SofmParams sofm;
};

nlohmann::json to_json(const BaselineConfig& c, Baseline which);

RunReport run_baseline_experiment(const Dataset& ds, Baseline algorithm,
                                  const BaselineConfig& config,
                                  std::span<const std::uint64_t> seeds);

/// The expectation-maximization row, carried as a published figure only.
RunReport published_em_report();

/// Report without timings, so identical inputs give identical bytes.
nlohmann::json to_json(const RunReport& r);
nlohmann::json timings_to_json(std::span<const RunReport> reports);

/// Aligned text table: one row per algorithm with mean accuracy and the
/// individual runs as "accuracy (correct)".
std::string format_report_table(std::span<const RunReport> reports);

}  // namespace qaca
