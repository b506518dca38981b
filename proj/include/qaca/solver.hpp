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
#include <string>
#include <vector>

#include "qaca/qubo.hpp"

namespace qaca {

using Bits = std::vector<std::uint8_t>;

enum class SolverId { Exhaustive, SimulatedAnnealing };

std::string to_string(SolverId id);

struct Sample {
    Bits bits;
    double energy = 0.0;
    std::size_t count = 0;
};

struct SolveResult {
    Bits bits;
    double energy = 0.0;
    SolverId solver = SolverId::Exhaustive;
    /// Multi-read solvers only: distinct per-restart bests, lowest energy first.
    std::vector<Sample> samples;
};

/// sum over i <= j of Q(i,j) * x_i * x_j. Throws on length mismatch or a
/// value other than 0/1.
double objective(const QuboMatrix& q, std::span<const std::uint8_t> bits);

/// Energy change from flipping bit k, computed directly from Q.
double flip_delta(const QuboMatrix& q, std::span<const std::uint8_t> bits, std::size_t k);

inline constexpr std::size_t kDefaultExhaustiveCap = 24;

/// Global minimum over all 2^n assignments. Ties resolve to the
/// lexicographically smallest bit vector (bit 0 most significant). Throws
/// std::invalid_argument when n exceeds `cap`.
SolveResult solve_exhaustive(const QuboMatrix& q, std::size_t cap = kDefaultExhaustiveCap);

/// Simulated-annealing parameters. Unset temperatures are derived from Q:
/// start = 10 * max|Q|, end = max(0.01 * min nonzero |Q|, 1e-6).
struct SaParams {
    std::size_t sweeps = 1000;
    std::size_t restarts = 100;
    std::optional<double> t_start;
    std::optional<double> t_end;
};

/// Best-of-restarts single-flip Metropolis annealing on a geometric schedule.
/// Restart r runs on its own stream seeded with derive_seed(seed, r).
SolveResult solve_sa(const QuboMatrix& q, const SaParams& params, std::uint64_t seed);

enum class SolveStrategy { Auto, Exhaustive, SimulatedAnnealing };

std::string to_string(SolveStrategy s);
SolveStrategy solve_strategy_from_string(const std::string& s);

struct SolverOptions {
    SolveStrategy strategy = SolveStrategy::Auto;
    std::size_t exhaustive_cap = kDefaultExhaustiveCap;
    SaParams sa;
};

/// Auto picks exhaustive search up to the cap and annealing above it.
SolveResult solve(const QuboMatrix& q, const SolverOptions& options, std::uint64_t seed);

}  // namespace qaca
