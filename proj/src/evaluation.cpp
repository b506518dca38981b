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

#include "qaca/evaluation.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qaca/error.hpp"
#include "qaca/random.hpp"
#include "qaca/schema.hpp"

namespace qaca {

namespace {

std::string percent(double accuracy) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", 100.0 * accuracy);
    return buf;
}

class Stopwatch {
 public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

 private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const std::vector<int>& require_labels(const Dataset& ds) {
    if (!ds.labels()) throw InputError("scoring needs a labelled dataset");
    return *ds.labels();
}

void finish(RunReport& report) {
    if (report.runs.empty()) return;
    double sum = 0.0;
    for (const auto& r : report.runs) {
        sum += r.accuracy;
        report.best_accuracy = std::max(report.best_accuracy, r.accuracy);
    }
    report.mean_accuracy = sum / static_cast<double>(report.runs.size());
}

RunRecord score(const Dataset& ds, std::size_t m, std::uint64_t seed, std::vector<int> labels,
                double seconds) {
    const auto& truth = require_labels(ds);
    const std::size_t classes = std::max(m, ds.num_classes());
    const auto match = permutation_accuracy(labels, truth, classes);
    return {seed, match.accuracy, match.correct, seconds, std::move(labels)};
}

}  // namespace

PermutationMatch permutation_accuracy(std::span<const int> predicted, std::span<const int> truth,
                                      std::size_t m) {
    if (predicted.size() != truth.size()) throw std::invalid_argument("label sequences differ in length");
    if (m == 0 || m > kMaxPermutationClasses) {
        throw std::invalid_argument("permutation matching supports 1.." +
                                    std::to_string(kMaxPermutationClasses) + " classes");
    }
    const auto in_range = [m](int l) { return l >= 0 && static_cast<std::size_t>(l) < m; };
    if (!std::all_of(predicted.begin(), predicted.end(), in_range) ||
        !std::all_of(truth.begin(), truth.end(), in_range)) {
        throw std::invalid_argument("label outside 0..m-1");
    }

    // contingency[cluster][class]
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m, 0));
    for (std::size_t i = 0; i < predicted.size(); ++i) ++table[predicted[i]][truth[i]];

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    PermutationMatch best;
    best.mapping = perm;
    bool first = true;
    do {
        std::size_t correct = 0;
        for (std::size_t k = 0; k < m; ++k) correct += table[k][perm[k]];
        if (first || correct > best.correct) {
            best.correct = correct;
            best.mapping = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.accuracy = predicted.empty() ? 0.0
                                      : static_cast<double>(best.correct) /
                                                static_cast<double>(predicted.size());
    return best;
}

nlohmann::json to_json(const QacaConfig& c) {
    return {{"m", c.m},
            {"n_v", c.n_v},
            {"epsilon", c.epsilon},
            {"intra_mode", to_string(c.intra_mode)},
            {"distance_mode", to_string(c.distance_mode)},
            {"scale_L", c.scale_values},
            {"standardize_features", c.standardize_features},
            {"solver", to_string(c.solver.strategy)},
            {"exhaustive_cap", c.solver.exhaustive_cap},
            {"sa_sweeps", c.solver.sa.sweeps},
            {"sa_restarts", c.solver.sa.restarts},
            {"sa_t_start", c.solver.sa.t_start ? nlohmann::json(*c.solver.sa.t_start) : nlohmann::json()},
            {"sa_t_end", c.solver.sa.t_end ? nlohmann::json(*c.solver.sa.t_end) : nlohmann::json()}};
}

QacaRun run_qaca(const Dataset& input, const QacaConfig& config, std::uint64_t seed,
                 bool keep_icms) {
    const Dataset ds = config.standardize_features ? standardize_features(input) : input;
    QacaRun run;
    run.seed = seed;
    const RangeSchedule schedule = init_schedule(ds, config.m);
    run.geometry = random_polygon_clusters(schedule, config.m, config.n_v, ds.dim(), config.epsilon, seed);
    run.form = build_cluster_form(build_lookup_tables(run.geometry, config.scale_values),
                                  config.intra_mode);

    run.results.reserve(ds.size());
    run.assignments.reserve(ds.size());
    run.labels.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        InstanceClusterMatrix icm = feed_instance(run.form, ds.instance(i), config.distance_mode);
        SolveResult result = solve(icm.q, config.solver, derive_seed(seed, i + 1));
        Assignment a = assemble_assignment(result.bits, run.form.tables, icm.values, i);
        run.labels.push_back(static_cast<int>(a.definite_cluster));
        run.assignments.push_back(std::move(a));
        run.results.push_back(std::move(result));
        if (keep_icms) run.icms.push_back(std::move(icm));
    }
    return run;
}

RunReport run_qaca_experiment(const Dataset& ds, const QacaConfig& config,
                              std::span<const std::uint64_t> seeds, std::vector<QacaRun>* runs,
                              bool keep_icms) {
    require_labels(ds);
    RunReport report;
    report.algorithm = "QACA";
    report.total = ds.size();
    report.config = to_json(config);
    for (std::uint64_t seed : seeds) {
        Stopwatch clock;
        QacaRun run = run_qaca(ds, config, seed, keep_icms);
        const double seconds = clock.seconds();
        report.runs.push_back(score(ds, config.m, seed, run.labels, seconds));
        if (runs) runs->push_back(std::move(run));
    }
    finish(report);
    return report;
}

std::string to_string(Baseline b) { return b == Baseline::KMeans ? "k-means" : "SOFM"; }

nlohmann::json to_json(const BaselineConfig& c, Baseline which) {
    nlohmann::json j{{"m", c.m}, {"standardize_features", c.standardize_features}};
    if (which == Baseline::KMeans) {
        j["kmeans_max_iter"] = c.kmeans.max_iter;
        j["kmeans_restarts"] = c.kmeans.restarts;
    } else {
        j["sofm_epochs"] = c.sofm.epochs;
        j["sofm_mu_start"] = c.sofm.mu_start;
        j["sofm_mu_end"] = c.sofm.mu_end;
        j["sofm_radius_start"] = c.sofm.radius_start.value_or(static_cast<double>(c.m) / 2.0);
        j["sofm_radius_end"] = c.sofm.radius_end;
    }
    return j;
}

RunReport run_baseline_experiment(const Dataset& input, Baseline algorithm,
                                  const BaselineConfig& config,
                                  std::span<const std::uint64_t> seeds) {
    require_labels(input);
    const Dataset ds = config.standardize_features ? standardize_features(input) : input;
    RunReport report;
    report.algorithm = to_string(algorithm);
    report.total = ds.size();
    report.config = to_json(config, algorithm);
    for (std::uint64_t seed : seeds) {
        Stopwatch clock;
        std::vector<int> labels = algorithm == Baseline::KMeans
                                          ? kmeans_cluster(ds, config.m, config.kmeans, seed).labels
                                          : sofm_cluster(ds, config.m, config.sofm, seed);
        const double seconds = clock.seconds();
        report.runs.push_back(score(ds, config.m, seed, std::move(labels), seconds));
    }
    finish(report);
    return report;
}

RunReport published_em_report() {
    RunReport r;
    r.algorithm = "EM";
    r.mean_accuracy = 0.86;
    r.best_accuracy = 0.86;
    r.published_only = true;
    r.config = {{"note", "published figure, not reproduced"}};
    return r;
}

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& run : r.runs) {
        runs.push_back({{"seed", run.seed}, {"accuracy", run.accuracy}, {"correct", run.correct}});
    }
    return {{"schema_version", kSchemaVersion},
            {"kind", "run_report"},
            {"algorithm", r.algorithm},
            {"published_only", r.published_only},
            {"total", r.total},
            {"mean_accuracy", r.mean_accuracy},
            {"best_accuracy", r.best_accuracy},
            {"runs", std::move(runs)},
            {"config", r.config}};
}

nlohmann::json timings_to_json(std::span<const RunReport> reports) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& r : reports) {
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& run : r.runs) runs.push_back({{"seed", run.seed}, {"seconds", run.seconds}});
        out[r.algorithm] = std::move(runs);
    }
    return out;
}

std::string format_report_table(std::span<const RunReport> reports) {
    std::vector<std::array<std::string, 3>> rows;
    rows.push_back({"Algorithm", "Accuracy in %", "Individual runs: % (correct)"});
    for (const auto& r : reports) {
        std::string individual;
        if (r.published_only) {
            individual = "published figure, not reproduced";
        } else {
            individual = "(";
            for (std::size_t i = 0; i < r.runs.size(); ++i) {
                if (i) individual += ", ";
                individual += percent(r.runs[i].accuracy) + " (" + std::to_string(r.runs[i].correct) + ")";
            }
            individual += ")";
        }
        const std::string mean = (r.runs.size() > 1 ? "Avg.: " : "") + percent(r.mean_accuracy);
        rows.push_back({r.algorithm, mean, individual});
    }
    std::size_t w0 = 0, w1 = 0;
    for (const auto& row : rows) {
        w0 = std::max(w0, row[0].size());
        w1 = std::max(w1, row[1].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        out << row[0] << std::string(w0 - row[0].size() + 2, ' ') << row[1]
            << std::string(w1 - row[1].size() + 2, ' ') << row[2] << '\n';
    }
    return out.str();
}

}  // namespace qaca
