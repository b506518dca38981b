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

#include "qaca/readout.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qaca {

namespace {

void check_dims(std::span<const std::uint8_t> bits, const LookupTables& tables) {
    if (bits.size() != tables.qubit_count()) {
        throw std::invalid_argument("result has " + std::to_string(bits.size()) +
                                    " bits, lookup tables have " +
                                    std::to_string(tables.qubit_count()) + " qubits");
    }
}

std::vector<double> uniform(std::size_t m) {
    return std::vector<double>(m, 1.0 / static_cast<double>(m));
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::vector<double> on_value_sums(std::span<const std::uint8_t> bits, const LookupTables& tables,
                                  std::span<const double> values) {
    check_dims(bits, tables);
    if (values.size() != tables.qubit_count()) {
        throw std::invalid_argument("instance values do not match the qubit count");
    }
    std::vector<double> sums(tables.cluster_count(), 0.0);
    for (std::size_t k = 0; k < tables.cluster_count(); ++k) {
        for (std::size_t q : tables.clusters[k]) {
            if (bits[q]) sums[k] += values[q];
        }
    }
    return sums;
}

std::vector<std::size_t> on_counts(std::span<const std::uint8_t> bits, const LookupTables& tables) {
    check_dims(bits, tables);
    std::vector<std::size_t> counts(tables.cluster_count(), 0);
    for (std::size_t k = 0; k < tables.cluster_count(); ++k) {
        for (std::size_t q : tables.clusters[k]) counts[k] += bits[q] ? 1 : 0;
    }
    return counts;
}

DefiniteAssignment definite_assignment(std::span<const std::uint8_t> bits,
                                       const LookupTables& tables,
                                       std::span<const double> values) {
    const auto sums = on_value_sums(bits, tables, values);
    DefiniteAssignment out;
    out.all_off = true;
    for (auto b : bits) {
        if (b) {
            out.all_off = false;
            break;
        }
    }
    if (out.all_off) return out;
    for (std::size_t k = 1; k < sums.size(); ++k) {
        if (sums[k] < sums[out.cluster]) out.cluster = k;
    }
    return out;
}

ClusterProbabilities probabilistic_by_count(std::span<const std::uint8_t> bits,
                                            const LookupTables& tables) {
    const auto counts = on_counts(bits, tables);
    std::size_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) return {uniform(counts.size()), false};
    ClusterProbabilities out;
    out.p.reserve(counts.size());
    for (auto c : counts) out.p.push_back(static_cast<double>(c) / static_cast<double>(total));
    return out;
}

ClusterProbabilities probabilistic_by_value(std::span<const std::uint8_t> bits,
                                            const LookupTables& tables,
                                            std::span<const double> values) {
    const auto sums = on_value_sums(bits, tables, values);
    double total = 0.0;
    for (double s : sums) total += s;
    if (total == 0.0) return {uniform(sums.size()), false};
    ClusterProbabilities out;
    for (double s : sums) {
        const double p = s / total + 0.0;  // no negative zero in dumps
        if (!(p >= 0.0 && p <= 1.0)) out.valid = false;
        out.p.push_back(p);
    }
    return out;
}

Assignment assemble_assignment(std::span<const std::uint8_t> bits, const LookupTables& tables,
                               std::span<const double> values, std::size_t instance_index) {
    Assignment a;
    a.instance_index = instance_index;
    const auto definite = definite_assignment(bits, tables, values);
    a.definite_cluster = definite.cluster;
    a.all_off = definite.all_off;
    a.prob_count = probabilistic_by_count(bits, tables).p;
    auto by_value = probabilistic_by_value(bits, tables, values);
    a.prob_value = std::move(by_value.p);
    a.prob_value_valid = by_value.valid;
    a.on_counts = on_counts(bits, tables);
    a.on_value_sums = on_value_sums(bits, tables, values);
    return a;
}

nlohmann::json to_json(const Assignment& a) {
    return {{"instance_index", a.instance_index},
            {"definite", a.definite_cluster},
            {"prob_count", a.prob_count},
            {"prob_value", a.prob_value},
            {"prob_value_valid", a.prob_value_valid},
            {"on_counts", a.on_counts},
            {"on_value_sums", a.on_value_sums},
            {"all_off", a.all_off}};
}

void write_assignments_csv(std::ostream& out, std::span<const Assignment> assignments) {
    const std::size_t m = assignments.empty() ? 0 : assignments.front().prob_count.size();
    out << "instance_index,definite";
    for (std::size_t k = 1; k <= m; ++k) out << ",p1_" << k;
    for (std::size_t k = 1; k <= m; ++k) out << ",p2_" << k;
    out << ",prob2_valid,all_off\n";
    for (const auto& a : assignments) {
        out << a.instance_index << ',' << a.definite_cluster;
        for (double p : a.prob_count) out << ',' << format_fixed(p, 6);
        for (double p : a.prob_value) out << ',' << format_fixed(p, 6);
        out << ',' << (a.prob_value_valid ? 1 : 0) << ',' << (a.all_off ? 1 : 0) << '\n';
    }
}

void write_assignments_jsonl(std::ostream& out, std::span<const Assignment> assignments) {
    for (const auto& a : assignments) out << to_json(a).dump() << '\n';
}

void write_probability_lines(std::ostream& out, std::span<const Assignment> assignments) {
    for (const auto& a : assignments) {
        out << "instance " << a.instance_index << " probabilities: ";
        for (std::size_t k = 0; k < a.prob_value.size(); ++k) {
            if (k) out << ", ";
            out << format_fixed(100.0 * a.prob_value[k], 2);
        }
        if (!a.prob_value_valid) out << " (invalid: mixed-sign or zero sums)";
        out << '\n';
    }
}

}  // namespace qaca
