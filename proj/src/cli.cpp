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

#include "qaca/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>
#include <utility>

#include "qaca/error.hpp"
#include "qaca/schema.hpp"
#include "qaca/stats.hpp"

namespace qaca {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Typed accessors; every failure names the key.

std::size_t as_count(const std::string& key, const json& v) {
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    if (v.is_number_integer()) {
        if (v.get<long long>() < 0) throw ConfigError(key, "must not be negative");
        return static_cast<std::size_t>(v.get<long long>());
    }
    throw ConfigError(key, "expected a non-negative integer, got " + v.dump());
}

double as_real(const std::string& key, const json& v) {
    if (!v.is_number()) throw ConfigError(key, "expected a number, got " + v.dump());
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(key, "must be finite");
    return d;
}

bool as_bool(const std::string& key, const json& v) {
    if (!v.is_boolean()) throw ConfigError(key, "expected true or false, got " + v.dump());
    return v.get<bool>();
}

std::string as_string(const std::string& key, const json& v) {
    if (!v.is_string()) throw ConfigError(key, "expected a string, got " + v.dump());
    return v.get<std::string>();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(' ');
        const auto e = item.find_last_not_of(' ');
        if (b != std::string::npos) parts.push_back(item.substr(b, e - b + 1));
    }
    return parts;
}

std::vector<std::uint64_t> as_seeds(const std::string& key, const json& v) {
    std::vector<std::uint64_t> seeds;
    if (v.is_array()) {
        for (const auto& s : v) seeds.push_back(as_count(key, s));
    } else if (v.is_number()) {
        seeds.push_back(as_count(key, v));
    } else if (v.is_string()) {
        for (const auto& part : split_list(v.get<std::string>())) {
            try {
                std::size_t used = 0;
                const unsigned long long s = std::stoull(part, &used);
                if (used != part.size() || part.front() == '-') throw std::invalid_argument(part);
                seeds.push_back(s);
            } catch (const std::exception&) {
                throw ConfigError(key, "'" + part + "' is not a non-negative integer seed");
            }
        }
    } else {
        throw ConfigError(key, "expected a list of seeds");
    }
    return seeds;
}

template <class F>
auto wrap_enum(const std::string& key, F&& parse) {
    try {
        return parse();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
    }
}

void set_algorithms(RunConfig& c, const std::string& key, const json& v) {
    c.run_qaca = c.run_kmeans = c.run_sofm = c.include_published_em = false;
    const auto parts = split_list(as_string(key, v));
    if (parts.empty()) throw ConfigError(key, "no algorithm selected");
    for (const auto& a : parts) {
        if (a == "qaca") {
            c.run_qaca = true;
        } else if (a == "kmeans") {
            c.run_kmeans = true;
        } else if (a == "sofm") {
            c.run_sofm = true;
        } else if (a == "all") {
            c.run_qaca = c.run_kmeans = c.run_sofm = c.include_published_em = true;
        } else {
            throw ConfigError(key, "unknown algorithm '" + a + "' (expected qaca, kmeans, sofm or all)");
        }
    }
}

std::string algorithms_string(const RunConfig& c) {
    if (c.run_qaca && c.run_kmeans && c.run_sofm && c.include_published_em) return "all";
    std::string s;
    const auto add = [&s](const char* name) { s += (s.empty() ? "" : ",") + std::string(name); };
    if (c.run_qaca) add("qaca");
    if (c.run_kmeans) add("kmeans");
    if (c.run_sofm) add("sofm");
    return s;
}

struct KeySpec {
    const char* key;
    const char* help;
    std::function<void(RunConfig&, const std::string&, const json&)> apply;
};

const std::vector<KeySpec>& key_specs() {
    static const std::vector<KeySpec> specs = {
            {"data", "dataset CSV path (required)",
             [](RunConfig& c, const std::string& k, const json& v) { c.data_path = as_string(k, v); }},
            {"labels", "name of the class-label column (required for scoring)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 if (v.is_null()) c.label_column.reset();
                 else c.label_column = as_string(k, v);
             }},
            {"algo", "qaca | kmeans | sofm | all, or a comma list (default qaca)",
             [](RunConfig& c, const std::string& k, const json& v) { set_algorithms(c, k, v); }},
            {"m", "cluster count, 2..8 (default 3)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.qaca.m = c.baselines.m = as_count(k, v);
             }},
            {"n_v", "vertices per cluster (default 1)",
             [](RunConfig& c, const std::string& k, const json& v) { c.qaca.n_v = as_count(k, v); }},
            {"epsilon", "sliding factor between cluster ranges (default 1.0)",
             [](RunConfig& c, const std::string& k, const json& v) { c.qaca.epsilon = as_real(k, v); }},
            {"intra_mode", "sqrt_coupling | zero (default sqrt_coupling)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.qaca.intra_mode = wrap_enum(k, [&] { return intra_mode_from_string(as_string(k, v)); });
             }},
            {"distance_mode", "subtract_square | squared_euclidean (default subtract_square)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.qaca.distance_mode =
                         wrap_enum(k, [&] { return distance_mode_from_string(as_string(k, v)); });
             }},
            {"scale_L", "standardize the vertex lookup values (default false)",
             [](RunConfig& c, const std::string& k, const json& v) { c.qaca.scale_values = as_bool(k, v); }},
            {"standardize_features", "standardize each feature column first (default false)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.qaca.standardize_features = c.baselines.standardize_features = as_bool(k, v);
             }},
            {"solver", "auto | exhaustive | sa (default auto)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.qaca.solver.strategy =
                         wrap_enum(k, [&] { return solve_strategy_from_string(as_string(k, v)); });
             }},
            {"exhaustive_cap", "largest problem solved exhaustively, <= 30 (default 24)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.qaca.solver.exhaustive_cap = as_count(k, v);
             }},
            {"sa_sweeps", "annealing sweeps per restart (default 1000)",
             [](RunConfig& c, const std::string& k, const json& v) { c.qaca.solver.sa.sweeps = as_count(k, v); }},
            {"sa_restarts", "annealing restarts (default 100)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.qaca.solver.sa.restarts = as_count(k, v);
             }},
            {"sa_t_start", "initial temperature (default 10 * max|Q|)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 if (v.is_null()) c.qaca.solver.sa.t_start.reset();
                 else c.qaca.solver.sa.t_start = as_real(k, v);
             }},
            {"sa_t_end", "final temperature (default max(0.01 * min nonzero |Q|, 1e-6))",
             [](RunConfig& c, const std::string& k, const json& v) {
                 if (v.is_null()) c.qaca.solver.sa.t_end.reset();
                 else c.qaca.solver.sa.t_end = as_real(k, v);
             }},
            {"kmeans_max_iter", "Lloyd iteration cap (default 300)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.baselines.kmeans.max_iter = as_count(k, v);
             }},
            {"kmeans_restarts", "k-means++ restarts per seed (default 10)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.baselines.kmeans.restarts = as_count(k, v);
             }},
            {"sofm_epochs", "SOFM training epochs (default 100)",
             [](RunConfig& c, const std::string& k, const json& v) { c.baselines.sofm.epochs = as_count(k, v); }},
            {"sofm_mu_start", "SOFM initial learning rate (default 0.5)",
             [](RunConfig& c, const std::string& k, const json& v) { c.baselines.sofm.mu_start = as_real(k, v); }},
            {"sofm_mu_end", "SOFM final learning rate (default 0.01)",
             [](RunConfig& c, const std::string& k, const json& v) { c.baselines.sofm.mu_end = as_real(k, v); }},
            {"sofm_radius_start", "SOFM initial radius (default m / 2)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 if (v.is_null()) c.baselines.sofm.radius_start.reset();
                 else c.baselines.sofm.radius_start = as_real(k, v);
             }},
            {"sofm_radius_end", "SOFM final radius (default 0.5)",
             [](RunConfig& c, const std::string& k, const json& v) {
                 c.baselines.sofm.radius_end = as_real(k, v);
             }},
            {"seeds", "seed list, e.g. 1,2,3,4,5 (default 1..5)",
             [](RunConfig& c, const std::string& k, const json& v) { c.seeds = as_seeds(k, v); }},
            {"output_dir", "directory for reports (default qaca-out; env QACA_OUTPUT_DIR)",
             [](RunConfig& c, const std::string& k, const json& v) { c.output_dir = as_string(k, v); }},
            {"dump_assignments", "write per-instance probability dumps (default false)",
             [](RunConfig& c, const std::string& k, const json& v) { c.dump_assignments = as_bool(k, v); }},
            {"dump_icm", "write every instance-cluster matrix as JSON (default false)",
             [](RunConfig& c, const std::string& k, const json& v) { c.dump_icm = as_bool(k, v); }},
    };
    return specs;
}

void apply_layer(RunConfig& c, const json& layer, const char* origin) {
    if (layer.is_null()) return;
    if (!layer.is_object()) throw ConfigError(origin, "configuration must be a JSON object");
    for (const auto& [key, value] : layer.items()) {
        const auto& specs = key_specs();
        const auto it = std::find_if(specs.begin(), specs.end(),
                                     [&key](const KeySpec& s) { return key == s.key; });
        if (it == specs.end()) throw ConfigError(key, "unknown configuration key");
        it->apply(c, key, value);
    }
}

void validate(const RunConfig& c) {
    if (c.data_path.empty()) throw ConfigError("data", "missing dataset path");
    if (c.qaca.m < 2 || c.qaca.m > kMaxPermutationClasses) {
        throw ConfigError("m", "must be between 2 and " + std::to_string(kMaxPermutationClasses));
    }
    if (c.qaca.n_v < 1) throw ConfigError("n_v", "must be at least 1");
    if (c.qaca.epsilon < 0.0) throw ConfigError("epsilon", "must be non-negative");
    if (c.qaca.solver.exhaustive_cap > 30) throw ConfigError("exhaustive_cap", "must be at most 30");
    const auto& sa = c.qaca.solver.sa;
    if (sa.sweeps < 1) throw ConfigError("sa_sweeps", "must be at least 1");
    if (sa.restarts < 1) throw ConfigError("sa_restarts", "must be at least 1");
    if (sa.t_end && !(*sa.t_end > 0.0)) throw ConfigError("sa_t_end", "must be positive");
    if (sa.t_start && !(*sa.t_start > 0.0)) throw ConfigError("sa_t_start", "must be positive");
    if (sa.t_start && sa.t_end && !(*sa.t_start > *sa.t_end)) {
        throw ConfigError("sa_t_start", "must exceed sa_t_end");
    }
    const auto& b = c.baselines;
    if (b.kmeans.max_iter < 1) throw ConfigError("kmeans_max_iter", "must be at least 1");
    if (b.kmeans.restarts < 1) throw ConfigError("kmeans_restarts", "must be at least 1");
    if (b.sofm.epochs < 1) throw ConfigError("sofm_epochs", "must be at least 1");
    if (!(b.sofm.mu_end > 0.0)) throw ConfigError("sofm_mu_end", "must be positive");
    if (!(b.sofm.mu_start >= b.sofm.mu_end) || b.sofm.mu_start > 1.0) {
        throw ConfigError("sofm_mu_start", "must lie in [sofm_mu_end, 1]");
    }
    if (!(b.sofm.radius_end > 0.0)) throw ConfigError("sofm_radius_end", "must be positive");
    if (!(b.sofm.radius_start.value_or(static_cast<double>(b.m) / 2.0) >= b.sofm.radius_end)) {
        throw ConfigError("sofm_radius_start", "must be at least sofm_radius_end");
    }
    if (c.seeds.empty()) throw ConfigError("seeds", "at least one seed is required");
    if (c.output_dir.empty()) throw ConfigError("output_dir", "must not be empty");
}

// ---------------------------------------------------------------------------
// Output handling: everything is rendered in memory, then written in one go.

using OutputFiles = std::vector<std::pair<std::filesystem::path, std::string>>;

void write_outputs(const std::filesystem::path& dir, const OutputFiles& files) {
    namespace fs = std::filesystem;
    const bool existed = fs::exists(dir);
    std::vector<fs::path> written;
    try {
        fs::create_directories(dir);
        for (const auto& [name, content] : files) {
            const fs::path target = dir / name;
            if (target.has_parent_path()) fs::create_directories(target.parent_path());
            std::ofstream f(target, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write '" + target.string() + "'");
            written.push_back(target);
            f << content;
            f.close();
            if (!f) throw std::runtime_error("failed writing '" + target.string() + "'");
        }
    } catch (...) {
        std::error_code ec;
        if (!existed) {
            fs::remove_all(dir, ec);
        } else {
            for (const auto& p : written) fs::remove(p, ec);
        }
        throw;
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class F>
std::string render(F&& f) {
    std::ostringstream s;
    f(s);
    return s.str();
}

// ---------------------------------------------------------------------------
// Inspect summaries

void inspect_geometry(const json& j, std::ostream& out) {
    const ClusterGeometry g = geometry_from_json(j);
    out << "geometry: m=" << g.m << " n_v=" << g.n_v << " d=" << g.d << " epsilon=" << g.epsilon
        << " seed=" << g.seed << " qubits=" << qubit_count(g.m, g.n_v, g.d) << '\n';
    for (std::size_t k = 0; k < g.m; ++k) {
        double lo = INFINITY, hi = -INFINITY;
        for (std::size_t v = 0; v < g.n_v; ++v) {
            for (double x : g.vertex(k, v)) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        }
        out << "  cluster " << k << ": coordinates in [" << lo << ", " << hi << "]\n";
    }
}

void inspect_cluster_form(const json& j, std::ostream& out) {
    const ClusterForm cf = cluster_form_from_json(j);
    const std::size_t n = cf.base.size();
    std::size_t same_neg = 0, same_zero = 0, same_pos = 0, cross_neg = 0, cross_zero = 0, cross_pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t jj = i; jj < n; ++jj) {
            const double v = cf.base(i, jj);
            const bool same = cf.tables.cluster_of(i) == cf.tables.cluster_of(jj);
            auto& neg = same ? same_neg : cross_neg;
            auto& zero = same ? same_zero : cross_zero;
            auto& pos = same ? same_pos : cross_pos;
            (v < 0.0 ? neg : v > 0.0 ? pos : zero)++;
        }
    }
    const bool ok = same_pos == 0 && cross_neg == 0 &&
                    (cf.intra_mode == IntraMode::SqrtCoupling || same_neg == 0);
    out << "cluster form: qubits=" << n << " clusters=" << cf.tables.cluster_count()
        << " intra_mode=" << to_string(cf.intra_mode) << '\n'
        << "  intra-cluster entries: " << same_neg << " negative, " << same_zero << " zero, "
        << same_pos << " positive\n"
        << "  inter-cluster entries: " << cross_neg << " negative, " << cross_zero << " zero, "
        << cross_pos << " positive\n"
        << "  sign structure: " << (ok ? "ok" : "VIOLATED") << '\n';
}

void inspect_icm(const json& j, std::ostream& out) {
    const InstanceClusterMatrix icm = icm_from_json(j);
    const auto upper = icm.q.upper_entries();
    const MeanStd ms = mean_std(upper);
    const auto [lo, hi] = std::minmax_element(upper.begin(), upper.end());
    out << "icm: instance=" << icm.instance_index << " qubits=" << icm.q.size()
        << " upper-triangle entries=" << upper.size() << '\n'
        << "  mean=" << ms.mean << " std=" << ms.std << " min=" << *lo << " max=" << *hi << '\n';
}

}  // namespace

std::vector<std::pair<std::string, std::string>> config_keys() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : key_specs()) out.emplace_back(s.key, s.help);
    return out;
}

RunConfig resolve_config(const json& file, const json& overrides,
                         const std::optional<std::string>& env_output_dir) {
    RunConfig c;
    apply_layer(c, file, "config");
    if (env_output_dir && !env_output_dir->empty()) c.output_dir = *env_output_dir;
    apply_layer(c, overrides, "flags");
    validate(c);
    return c;
}

json read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file '" + path.string() + "'");
    try {
        json j = json::parse(in);
        if (!j.is_object()) throw InputError("config file must hold a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw InputError("config file '" + path.string() + "': " + e.what());
    }
}

json to_json(const RunConfig& c) {
    const auto& s = c.qaca.solver;
    return {{"data", c.data_path},
            {"labels", c.label_column ? json(*c.label_column) : json()},
            {"algo", algorithms_string(c)},
            {"m", c.qaca.m},
            {"n_v", c.qaca.n_v},
            {"epsilon", c.qaca.epsilon},
            {"intra_mode", to_string(c.qaca.intra_mode)},
            {"distance_mode", to_string(c.qaca.distance_mode)},
            {"scale_L", c.qaca.scale_values},
            {"standardize_features", c.qaca.standardize_features},
            {"solver", to_string(s.strategy)},
            {"exhaustive_cap", s.exhaustive_cap},
            {"sa_sweeps", s.sa.sweeps},
            {"sa_restarts", s.sa.restarts},
            {"sa_t_start", s.sa.t_start ? json(*s.sa.t_start) : json()},
            {"sa_t_end", s.sa.t_end ? json(*s.sa.t_end) : json()},
            {"kmeans_max_iter", c.baselines.kmeans.max_iter},
            {"kmeans_restarts", c.baselines.kmeans.restarts},
            {"sofm_epochs", c.baselines.sofm.epochs},
            {"sofm_mu_start", c.baselines.sofm.mu_start},
            {"sofm_mu_end", c.baselines.sofm.mu_end},
            {"sofm_radius_start",
             c.baselines.sofm.radius_start ? json(*c.baselines.sofm.radius_start) : json()},
            {"sofm_radius_end", c.baselines.sofm.radius_end},
            {"seeds", c.seeds},
            {"output_dir", c.output_dir.string()},
            {"dump_assignments", c.dump_assignments},
            {"dump_icm", c.dump_icm}};
}

int cmd_run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        const Dataset ds = load_csv(c.data_path, c.label_column);
        if (!ds.labels()) throw ConfigError("labels", "a label column is required to score clusterings");
        if (c.qaca.m > ds.size()) throw ConfigError("m", "more clusters than instances");
        if (c.run_qaca && c.qaca.solver.strategy == SolveStrategy::Exhaustive) {
            const std::size_t n = qubit_count(c.qaca.m, c.qaca.n_v, ds.dim());
            if (n > c.qaca.solver.exhaustive_cap) {
                throw ConfigError("solver", "exhaustive search requested for " + std::to_string(n) +
                                                    " qubits, above exhaustive_cap");
            }
        }

        OutputFiles files;
        std::vector<RunReport> reports;
        if (c.include_published_em) reports.push_back(published_em_report());
        if (c.run_kmeans) {
            reports.push_back(run_baseline_experiment(ds, Baseline::KMeans, c.baselines, c.seeds));
        }
        if (c.run_sofm) {
            reports.push_back(run_baseline_experiment(ds, Baseline::Sofm, c.baselines, c.seeds));
        }
        if (c.run_qaca) {
            std::vector<QacaRun> runs;
            reports.push_back(run_qaca_experiment(ds, c.qaca, c.seeds, &runs, c.dump_icm));
            for (const auto& run : runs) {
                const std::string tag = "seed_" + std::to_string(run.seed);
                files.emplace_back("geometry_" + tag + ".json", dump(to_json(run.geometry)));
                files.emplace_back("cluster_form_" + tag + ".json", dump(to_json(run.form)));
                files.emplace_back("assignments_" + tag + ".csv",
                                   render([&](std::ostream& s) { write_assignments_csv(s, run.assignments); }));
                if (c.dump_assignments) {
                    files.emplace_back("assignments_" + tag + ".jsonl", render([&](std::ostream& s) {
                                           write_assignments_jsonl(s, run.assignments);
                                       }));
                    files.emplace_back("probabilities_" + tag + ".txt", render([&](std::ostream& s) {
                                           write_probability_lines(s, run.assignments);
                                       }));
                }
                for (const auto& icm : run.icms) {
                    files.emplace_back(std::filesystem::path("icm_" + tag) /
                                               ("instance_" + std::to_string(icm.instance_index) + ".json"),
                                       dump(to_json(icm)));
                }
            }
        }

        json report_docs = json::array();
        for (const auto& r : reports) report_docs.push_back(to_json(r));
        const std::string table = format_report_table(reports);
        files.emplace_back("config.json", dump(to_json(c)));
        files.emplace_back("report.json", dump({{"schema_version", kSchemaVersion},
                                                {"kind", "run_reports"},
                                                {"dataset", c.data_path},
                                                {"instances", ds.size()},
                                                {"reports", std::move(report_docs)}}));
        files.emplace_back("report.txt", table);
        files.emplace_back("timings.json", dump(timings_to_json(reports)));
        write_outputs(c.output_dir, files);

        out << table;
        out << "reports written to " << c.output_dir.string() << '\n';
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "runtime failure: " << e.what() << '\n';
        return 2;
    }
}

int cmd_inspect(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
    try {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open '" + path.string() + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("schema error: not valid JSON (") + e.what() + ")");
        }
        if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
            throw InputError("schema error: document has no 'kind'");
        }
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "geometry") {
            inspect_geometry(j, out);
        } else if (kind == "cluster_form") {
            inspect_cluster_form(j, out);
        } else if (kind == "icm") {
            inspect_icm(j, out);
        } else {
            throw InputError("schema error: unsupported kind '" + kind + "'");
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace qaca
