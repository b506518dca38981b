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

#include "qaca/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qaca/random.hpp"

namespace qaca {

namespace {

// Dense copy of Q used by the solvers: diagonal plus a symmetric coupling
// matrix with zero diagonal, so that the local field of bit k is
// diag[k] + sum_i coupling[k*n + i] * x_i.
struct DenseQubo {
    explicit DenseQubo(const QuboMatrix& q) : n(q.size()), diag(n), coupling(n * n, 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            diag[i] = q(i, i);
            for (std::size_t j = i + 1; j < n; ++j) {
                coupling[i * n + j] = q(i, j);
                coupling[j * n + i] = q(i, j);
            }
        }
    }

    void local_fields(const Bits& x, std::vector<double>& h) const {
        h.assign(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            double f = diag[k];
            const double* row = &coupling[k * n];
            for (std::size_t i = 0; i < n; ++i) f += row[i] * x[i];
            h[k] = f;
        }
    }

    // Flip bit k, keeping the local fields current. Returns the energy change.
    double flip(Bits& x, std::vector<double>& h, std::size_t k) const {
        const double sign = x[k] ? -1.0 : 1.0;
        const double delta = sign * h[k];
        x[k] ^= 1;
        const double* row = &coupling[k * n];
        for (std::size_t i = 0; i < n; ++i) h[i] += sign * row[i];
        return delta;
    }

    std::size_t n;
    std::vector<double> diag;
    std::vector<double> coupling;
};

void check_bits(const QuboMatrix& q, std::span<const std::uint8_t> bits) {
    if (bits.size() != q.size()) {
        throw std::invalid_argument("bit vector has length " + std::to_string(bits.size()) +
                                    ", matrix has size " + std::to_string(q.size()));
    }
    for (auto b : bits) {
        if (b > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
    }
}

}  // namespace

std::string to_string(SolverId id) {
    return id == SolverId::Exhaustive ? "exhaustive" : "sa";
}

double objective(const QuboMatrix& q, std::span<const std::uint8_t> bits) {
    check_bits(q, bits);
    double e = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!bits[i]) continue;
        for (std::size_t j = i; j < q.size(); ++j) {
            if (bits[j]) e += q(i, j);
        }
    }
    return e;
}

double flip_delta(const QuboMatrix& q, std::span<const std::uint8_t> bits, std::size_t k) {
    check_bits(q, bits);
    if (k >= q.size()) throw std::out_of_range("flip index out of range");
    const double change = bits[k] ? -1.0 : 1.0;
    double field = q(k, k);
    for (std::size_t i = 0; i < k; ++i) field += q(i, k) * bits[i];
    for (std::size_t j = k + 1; j < q.size(); ++j) field += q(k, j) * bits[j];
    return change * field;
}

SolveResult solve_exhaustive(const QuboMatrix& q, std::size_t cap) {
    const std::size_t n = q.size();
    if (n > cap) {
        throw std::invalid_argument("exhaustive search capped at " + std::to_string(cap) +
                                    " bits, matrix has " + std::to_string(n));
    }
    if (n > 62) throw std::invalid_argument("exhaustive search supports at most 62 bits");

    SolveResult best;
    best.solver = SolverId::Exhaustive;
    best.bits.assign(n, 0);
    best.energy = 0.0;
    if (n == 0) return best;

    const DenseQubo dense(q);
    double scale = 1.0;
    for (double v : q.upper_entries()) scale += std::abs(v);
    const double tie_tol = 1e-12 * scale;

    // Leading bits are walked in plain binary order, one block each; the
    // trailing bits of a block are walked in Gray-code order so each step is a
    // single flip. Fields and energy are recomputed exactly at every block.
    const std::size_t tail = std::min<std::size_t>(n, 12);
    const std::size_t head = n - tail;
    const std::uint64_t blocks = std::uint64_t{1} << head;
    const std::uint64_t steps = std::uint64_t{1} << tail;

    Bits x(n, 0);
    std::vector<double> h;
    bool have_best = false;
    for (std::uint64_t prefix = 0; prefix < blocks; ++prefix) {
        for (std::size_t i = 0; i < head; ++i) x[i] = (prefix >> (head - 1 - i)) & 1U;
        for (std::size_t i = head; i < n; ++i) x[i] = 0;
        dense.local_fields(x, h);
        double e = objective(q, x);
        for (std::uint64_t t = 0; t < steps; ++t) {
            if (t > 0) {
                const std::size_t k = n - 1 - static_cast<std::size_t>(std::countr_zero(t));
                e += dense.flip(x, h, k);
            }
            if (!have_best || e < best.energy - tie_tol) {
                best.bits = x;
                best.energy = e;
                have_best = true;
            } else if (e <= best.energy + tie_tol && x < best.bits) {
                best.bits = x;
                best.energy = std::min(e, best.energy);
            }
        }
    }
    best.energy = objective(q, best.bits);
    return best;
}

SolveResult solve_sa(const QuboMatrix& q, const SaParams& params, std::uint64_t seed) {
    if (params.sweeps < 1) throw std::invalid_argument("SA needs at least one sweep");
    if (params.restarts < 1) throw std::invalid_argument("SA needs at least one restart");
    const std::size_t n = q.size();

    double t_start = params.t_start.value_or(10.0 * q.max_abs());
    double t_end = params.t_end.value_or(std::max(0.01 * q.min_abs_nonzero(), 1e-6));
    if (!params.t_start && t_start <= t_end) t_start = std::max(1.0, 10.0 * t_end);
    if (!(t_end > 0.0) || !(t_start > t_end) || !std::isfinite(t_start)) {
        throw std::invalid_argument("SA temperatures must satisfy t_start > t_end > 0");
    }

    SolveResult result;
    result.solver = SolverId::SimulatedAnnealing;
    if (n == 0) {
        result.samples.push_back({{}, 0.0, params.restarts});
        return result;
    }

    const DenseQubo dense(q);
    const double ratio = t_end / t_start;
    std::vector<double> temperatures(params.sweeps);
    for (std::size_t s = 0; s < params.sweeps; ++s) {
        const double frac =
                params.sweeps == 1 ? 1.0 : static_cast<double>(s) / static_cast<double>(params.sweeps - 1);
        temperatures[s] = t_start * std::pow(ratio, frac);
    }

    std::map<Bits, std::size_t> bests;
    Bits x(n);
    std::vector<double> h;
    for (std::size_t r = 0; r < params.restarts; ++r) {
        Rng rng(derive_seed(seed, r));
        for (auto& b : x) b = static_cast<std::uint8_t>(rng() >> 63);
        dense.local_fields(x, h);
        double e = objective(q, x);
        Bits restart_best = x;
        double restart_best_e = e;
        for (double temp : temperatures) {
            for (std::size_t k = 0; k < n; ++k) {
                const double delta = (x[k] ? -1.0 : 1.0) * h[k];
                if (delta <= 0.0 || uniform01(rng) < std::exp(-delta / temp)) {
                    e += dense.flip(x, h, k);
                    if (e < restart_best_e) {
                        restart_best_e = e;
                        restart_best = x;
                    }
                }
            }
        }
        ++bests[restart_best];
    }

    for (const auto& [bits, count] : bests) {
        result.samples.push_back({bits, objective(q, bits), count});
    }
    std::stable_sort(result.samples.begin(), result.samples.end(),
                     [](const Sample& a, const Sample& b) { return a.energy < b.energy; });
    result.bits = result.samples.front().bits;
    result.energy = result.samples.front().energy;
    return result;
}

std::string to_string(SolveStrategy s) {
    switch (s) {
        case SolveStrategy::Auto: return "auto";
        case SolveStrategy::Exhaustive: return "exhaustive";
        case SolveStrategy::SimulatedAnnealing: return "sa";
    }
    return "auto";
}

SolveStrategy solve_strategy_from_string(const std::string& s) {
    if (s == "auto") return SolveStrategy::Auto;
    if (s == "exhaustive") return SolveStrategy::Exhaustive;
    if (s == "sa") return SolveStrategy::SimulatedAnnealing;
    throw std::invalid_argument("unknown solver '" + s + "' (expected auto, exhaustive or sa)");
}

SolveResult solve(const QuboMatrix& q, const SolverOptions& options, std::uint64_t seed) {
    switch (options.strategy) {
        case SolveStrategy::Exhaustive:
            return solve_exhaustive(q, options.exhaustive_cap);
        case SolveStrategy::SimulatedAnnealing:
            return solve_sa(q, options.sa, seed);
        case SolveStrategy::Auto:
            break;
    }
    if (q.size() <= options.exhaustive_cap) return solve_exhaustive(q, options.exhaustive_cap);
    return solve_sa(q, options.sa, seed);
}

}  // namespace qaca
