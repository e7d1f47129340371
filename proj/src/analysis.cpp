// Copyright 2026 The planarpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planarpulse/analysis.hpp"

#include <cmath>
#include <thread>

#include "planarpulse/error_model.hpp"

namespace planarpulse {

namespace {

constexpr double kInfidelityFloor = 1e-14;
constexpr int kSlopeSamples = 12;

}  // namespace

double time_cost(const Sequence& seq) {
    double total = 0.0;
    for (const Pulse& p : seq) {
        total += std::abs(p.theta);
    }
    return total / kPi;
}

double predicted_time_cost(const ThetaDecomposition& d, Robustness robustness) {
    const double legs = d.theta1 + d.theta2;
    if (robustness == Robustness::amplitude_only) {
        return 4.0 + legs / kPi;
    }
    const double k_sum = corpse_k(d.theta1) + corpse_k(d.theta2);
    return 12.0 + (legs - 4.0 * k_sum) / kPi;
}

SweepGrid sweep(const Mat2& target, const Sequence& seq,
                std::vector<double> epsilons, std::vector<double> fs,
                std::string target_id, std::string sequence_id,
                unsigned num_threads) {
    if (epsilons.empty() || fs.empty()) {
        throw std::invalid_argument("sweep axes must be nonempty");
    }
    SweepGrid grid;
    grid.epsilons = std::move(epsilons);
    grid.fs = std::move(fs);
    grid.target_id = std::move(target_id);
    grid.sequence_id = std::move(sequence_id);
    grid.infidelities.resize(grid.fs.size() * grid.epsilons.size());

    const std::size_t n_rows = grid.fs.size();
    const std::size_t n_cols = grid.epsilons.size();
    auto fill_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < n_cols; ++j) {
            const ErrorParams err{grid.epsilons[j], grid.fs[i]};
            grid.infidelities[i * n_cols + j] =
                infidelity(target, faulty_compose(seq, err));
        }
    };

    unsigned workers = num_threads == 0 ? std::thread::hardware_concurrency()
                                        : num_threads;
    if (workers <= 1 || n_rows <= 1) {
        for (std::size_t i = 0; i < n_rows; ++i) {
            fill_row(i);
        }
        return grid;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n_rows));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n_rows; i += workers) {
                fill_row(i);  // rows are disjoint, result is order independent
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    return grid;
}

double scaling_exponent(const Sequence& seq, const Mat2& target,
                        ErrorVariable variable, double lo, double hi) {
    if (!(0.0 < lo && lo < hi)) {
        throw std::invalid_argument("scaling window must satisfy 0 < lo < hi");
    }
    const double ratio = hi / lo;
    std::vector<double> log_x;
    std::vector<double> log_y;
    for (int i = 0; i < kSlopeSamples; ++i) {
        const double x = lo * std::pow(ratio, double(i) / (kSlopeSamples - 1));
        const ErrorParams err = variable == ErrorVariable::epsilon
                                    ? ErrorParams{x, 0.0}
                                    : ErrorParams{0.0, x};
        const double inf = infidelity(target, faulty_compose(seq, err));
        if (inf < kInfidelityFloor) {
            continue;
        }
        log_x.push_back(std::log(x));
        log_y.push_back(std::log(inf));
    }
    const std::size_t n = log_x.size();
    if (n < 3) {
        throw InsufficientData("fewer than 3 points above the infidelity floor");
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += log_x[i];
        mean_y += log_y[i];
    }
    mean_x /= double(n);
    mean_y /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (log_x[i] - mean_x) * (log_x[i] - mean_x);
        sxy += (log_x[i] - mean_x) * (log_y[i] - mean_y);
    }
    return sxy / sxx;
}

std::vector<CatalogEntry> table1_catalog() {
    // quad4 is the four-pulse closure construction built by this library;
    // quad-sym its five-pulse amplitude-symmetric Hadamard variant. The
    // other families are literature constants kept for comparison only.
    return {
        {"quad4", Gate::hadamard, 4, 5.5, true, false, true},
        {"quad4", Gate::z_phi, 4, 6.0, true, false, true},
        {"quad-sym", Gate::hadamard, 5, 5.5, true, false, true},
        {"SCROFULOUS", Gate::hadamard, 6, 5.3, true, false, false},
        {"SCROFULOUS", Gate::z_phi, 6, 6.0, true, false, false},
        {"SK1", Gate::hadamard, 6, 9.5, true, false, false},
        {"SK1", Gate::z_phi, 6, 10.0, true, false, false},
        {"BB1", Gate::hadamard, 8, 9.5, true, false, false},
        {"BB1", Gate::z_phi, 8, 10.0, true, false, false},
        {"nested quad4", Gate::hadamard, 8, 12.4, true, true, true},
        {"nested quad4", Gate::z_phi, 8, 12.7, true, true, true},
        {"nested quad-sym", Gate::hadamard, 11, 16.3, true, true, true},
        {"reduced CinSK", Gate::hadamard, 10, 16.4, true, true, false},
        {"reduced CinSK", Gate::z_phi, 10, 16.7, true, true, false},
        {"reduced CinBB", Gate::hadamard, 12, 16.4, true, true, false},
        {"reduced CinBB", Gate::z_phi, 12, 16.7, true, true, false},
        {"reduced SKinsC", Gate::hadamard, 12, 12.4, true, true, false},
        {"reduced SKinsC", Gate::z_phi, 12, 12.7, true, true, false},
    };
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name, Gate gate) {
    for (const CatalogEntry& e : table1_catalog()) {
        if (e.name == name && e.gate == gate) {
            return e;
        }
    }
    return std::nullopt;
}

}  // namespace planarpulse
