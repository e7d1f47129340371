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

#include <iosfwd>
#include <optional>
#include <string>

#include "planarpulse/analysis.hpp"
#include "planarpulse/gate_targets.hpp"

namespace planarpulse::cli {

// Exit-code contract shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDegenerate = 3;

struct SynthOptions {
    TargetSpec spec;
    std::string out_path;  // empty: document goes to `out`, summary to `err`
};

struct SweepOptions {
    std::string doc_path;
    std::string eps_spec = "-0.2:0.2:81";        // lo:hi:n
    std::string f_spec = "0,0.001,0.01,0.1";     // comma list
    std::string out_path;                        // empty: CSV to `out`
};

struct VerifyOptions {
    std::string doc_path;
    double slope_lo = 1e-3;
    double slope_hi = 1e-2;
};

struct TableOptions {
    std::optional<Gate> gate_filter;
    bool csv = false;
};

/// Synthesize a sequence document; prints pulse count, time cost,
/// finite-difference generator norm and closure residual.
int run_synth(const SynthOptions& opts, std::ostream& out, std::ostream& err);

/// Infidelity sweep of a stored sequence against its declared target,
/// emitted as CSV with header f,epsilon,infidelity (f-major order, 12
/// significant digits). Output is byte-stable across runs.
int run_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

/// Re-check a stored sequence: unitarity, target reproduction up to global
/// phase, amplitude-generator norm, amplitude-error slope and (for nested
/// documents) off-resonance slope. One PASS/FAIL line per check; exit 0
/// iff all pass.
int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// Print the composite-pulse cost catalog next to values recomputed from
/// the sequences this library actually builds, flagging mismatches.
int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace planarpulse::cli
