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
#include <variant>

#include "planarpulse/corpse.hpp"
#include "planarpulse/planar_synth.hpp"
#include "planarpulse/su2.hpp"

namespace planarpulse {

enum class Robustness {
    amplitude_only,  // first-order amplitude-error cancellation
    nested,          // additionally off-resonance robust via CORPSE nesting
};

struct ZGate {
    double phi = 0.0;
};
struct HadamardAsym {};
struct HadamardSym {};
struct PlanarRotation {
    double theta = 0.0;
    double phi = 0.0;
};
struct ArbitraryGate {
    Mat2 unitary;
};

using TargetKind =
    std::variant<ZGate, HadamardAsym, HadamardSym, PlanarRotation, ArbitraryGate>;

struct TargetSpec {
    TargetKind kind;
    Robustness robustness = Robustness::amplitude_only;
};

/// Ideal propagator of a target (phase convention: z rotations are
/// exp(-i phi sz/2), the Hadamard is (sx+sz)/sqrt(2)).
Mat2 target_unitary(const TargetKind& kind);

Mat2 hadamard();

/// Planar split of a z rotation into two pi pulses,
///   Z_phi = (pi about 0) (pi about -phi/2) up to global phase.
ThetaDecomposition z_gate_decomposition(double phi);

/// Planar split of the Hadamard used by the four-pulse construction:
/// theta1 = pi, theta2 = pi/2, phi1 = 3pi/2, phi2 = -3pi/2.
ThetaDecomposition hadamard_asym_decomposition();

/// Trivial-pulse phases of the five-pulse symmetric Hadamard:
///   alpha = arccos((-10 - sqrt(295)) / 40) ~ 2.32
///   beta  = arccos((-10 + sqrt(295)) / 40) ~ 1.39
struct SymHadamardPhases {
    double alpha;
    double beta;
};
SymHadamardPhases sym_hadamard_phases();

/// First-order amplitude-error vector of the symmetric Hadamard sequence
/// with trivial-pulse phases (phi1, phi2):
///   pi (2 cos phi1 + 2 cos phi2 + 1, 2 sin phi1 - 2 sin phi2 + 1/2, 0).
/// sym_hadamard_phases() is its exact root.
ErrorVector sym_hadamard_error_vector(double phi1, double phi2);

/// Robust z rotation: four pulses (amplitude-only) or eight (nested).
/// Throws DegenerateTarget when phi is equivalent to 2*pi (mod 4*pi),
/// where the planar diagonal vanishes; note phi = 0 is fine and returns a
/// sequence composing to +-identity.
Sequence robust_z(double phi, Robustness robustness);

/// Robust Hadamard from the two-pulse split: 4 pulses / time cost 5.5
/// (amplitude-only), 8 pulses / ~12.4 (nested).
Sequence robust_hadamard_asym(Robustness robustness);

/// Robust Hadamard from the amplitude-symmetric three-pulse split with the
/// two trivial pulses interleaved: 5 pulses / time cost 5.5
/// (amplitude-only), 11 pulses / ~16.3 (nested).
Sequence robust_hadamard_sym(Robustness robustness);

/// Robust in-plane rotation. The flip angle is reduced modulo windings
/// first; a trivial target yields an empty sequence.
Sequence robust_planar(double theta, double phi, Robustness robustness);

/// Robust realization of an arbitrary unitary via the split
/// U = Theta * Z: the z part runs first in time, then the planar part.
/// Targets within tolerance of the identity return an empty sequence;
/// pure z rotations and in-plane rotations dispatch to their specialized
/// constructions instead of the general path.
Sequence robust_arbitrary(const Mat2& u, Robustness robustness);

/// Synthesis outcome with the solver metadata the CLI reports and stores.
struct SynthesisReport {
    Sequence sequence;
    std::optional<QuadSolution> theta_solve;  // planar-part closure
    std::optional<QuadSolution> z_solve;      // z-part closure (general path)
    double closure_residual = 0.0;            // worst residual across solves
};

SynthesisReport synthesize(const TargetSpec& spec);

}  // namespace planarpulse
