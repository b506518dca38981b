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
#include <ostream>
#include <span>
#include <vector>

#include "json.hpp"
#include "qaca/cluster_form.hpp"

namespace qaca {

/// Cluster assignment of one instance, read from a minimizing bit vector.
struct Assignment {
    std::size_t instance_index = 0;
    std::size_t definite_cluster = 0;
    std::vector<double> prob_count;  // share of on-qubits per cluster
    std::vector<double> prob_value;  // share of on-qubit L sums per cluster
    bool prob_value_valid = false;
    std::vector<std::size_t> on_counts;
    std::vector<double> on_value_sums;
    bool all_off = false;
};

struct DefiniteAssignment {
    std::size_t cluster = 0;
    bool all_off = false;
};

struct ClusterProbabilities {
    std::vector<double> p;
    bool valid = true;  // for the count method: false only when every qubit is off
};

/// Sum of L over the on-qubits of each cluster (0 for a cluster with none on).
std::vector<double> on_value_sums(std::span<const std::uint8_t> bits, const LookupTables& tables,
                                  std::span<const double> values);
std::vector<std::size_t> on_counts(std::span<const std::uint8_t> bits, const LookupTables& tables);

/// Cluster with the lowest on-qubit value sum; ties go to the lowest ID.
/// With every bit off the answer is cluster 0 and `all_off` is set.
DefiniteAssignment definite_assignment(std::span<const std::uint8_t> bits,
                                       const LookupTables& tables,
                                       std::span<const double> values);

/// On-count of each cluster over the total on-count. All off gives the
/// uniform vector with valid = false.
ClusterProbabilities probabilistic_by_count(std::span<const std::uint8_t> bits,
                                            const LookupTables& tables);

/// On-value sum of each cluster over the total. Valid only when every share
/// lands in [0, 1], i.e. the nonzero sums share one sign. Mixed signs keep the
/// raw ratios with valid = false; a zero total gives the uniform vector, also
/// flagged invalid.
ClusterProbabilities probabilistic_by_value(std::span<const std::uint8_t> bits,
                                            const LookupTables& tables,
                                            std::span<const double> values);

Assignment assemble_assignment(std::span<const std::uint8_t> bits, const LookupTables& tables,
                               std::span<const double> values, std::size_t instance_index);

nlohmann::json to_json(const Assignment& a);

/// instance_index,definite,p1_1..p1_m,p2_1..p2_m,prob2_valid,all_off
void write_assignments_csv(std::ostream& out, std::span<const Assignment> assignments);
/// One JSON object per line.
void write_assignments_jsonl(std::ostream& out, std::span<const Assignment> assignments);
/// "instance N probabilities: a, b, c" with value-share percentages, two decimals.
void write_probability_lines(std::ostream& out, std::span<const Assignment> assignments);

}  // namespace qaca
