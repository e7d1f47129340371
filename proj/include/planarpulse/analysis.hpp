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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planarpulse/gate_targets.hpp"
#include "planarpulse/su2.hpp"

namespace planarpulse {

/// Operation time cost T = sum_i |theta_i| / pi.
double time_cost(const Sequence& seq);

/// Closed-form time cost of the synthesized realization of a two-leg
/// planar decomposition (both legs assumed nontrivial):
///   amplitude-only: 4 + (theta1 + theta2) / pi
///   nested:        12 + (theta1 + theta2 - 4 (k1 + k2)) / pi
/// with k_i = corpse_k(theta_i). Matches time_cost of the actually built
/// sequence to 1e-9.
double predicted_time_cost(const ThetaDecomposition& d, Robustness robustness);

/// Infidelity over an (f, epsilon) grid. Rows follow f, columns epsilon.
struct SweepGrid {
    std::vector<double> epsilons;
    std::vector<double> fs;
    std::vector<double> infidelities;  // row-major, fs.size() x epsilons.size()
    std::string target_id;
    std::string sequence_id;

    double at(std::size_t f_index, std::size_t eps_index) const {
        return infidelities[f_index * epsilons.size() + eps_index];
    }
};

/// Evaluate infidelity(target, faulty_compose(seq, eps, f)) over the grid.
/// Cells are independent pure evaluations; rows are distributed over
/// num_threads workers (0 = hardware concurrency) and the result is
/// bitwise identical for any thread count.
SweepGrid sweep(const Mat2& target, const Sequence& seq,
                std::vector<double> epsilons, std::vector<double> fs,
                std::string target_id = {}, std::string sequence_id = {},
                unsigned num_threads = 0);

enum class ErrorVariable { epsilon, f };

/// Least-squares slope of log(infidelity) vs log(error) over 12 log-spaced
/// samples in [lo, hi], the other error held at zero. Points below the
/// 1e-14 numerical floor are excluded; fewer than 3 usable points raises
/// InsufficientData. A bare pulse scales with slope ~2, a first-order
/// robust sequence with slope ~4.
double scaling_exponent(const Sequence& seq, const Mat2& target,
                        ErrorVariable variable, double lo, double hi);

enum class Gate { hadamard, z_phi };

/// One catalog row: pulse count and time cost of a named composite-pulse
/// family for one gate, with its robustness claims. Entries with
/// synthesized == true are reproduced by this library and cross-checked
/// against the actually built sequences.
struct CatalogEntry {
    std::string name;
    Gate gate;
    int pulse_count;
    double time_cost;
    bool robust_ae;
    bool robust_ore;
    bool synthesized;
};

/// Reference catalog of composite-pulse costs for the Hadamard and Z_phi
/// gates. Rows for foreign families (SCROFULOUS, SK1, BB1, reduced CCCP)
/// are stored constants; rows for the closure constructions are recomputed
/// by cmd_table from synthesized sequences.
std::vector<CatalogEntry> table1_catalog();

std::optional<CatalogEntry> catalog_lookup(const std::string& name, Gate gate);

}  // namespace planarpulse
