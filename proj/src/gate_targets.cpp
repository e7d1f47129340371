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

#include "planarpulse/gate_targets.hpp"

#include <cmath>
#include <utility>

namespace planarpulse {

namespace {

constexpr double kDispatchTol = 1e-9;
// Propagator distance 1e-9 corresponds to infidelity ~1e-19; use a slightly
// looser gate for the identity dispatch.
constexpr double kIdentityInfidelity = 1e-18;

// Build the robust realization of one planar decomposition and record the
// closure it used.
void append_theta_part(SynthesisReport& report, const ThetaDecomposition& d,
                       Robustness robustness, bool is_z_part = false) {
    const QuadSolution sol = solve_quadrilateral(d);
    Sequence part = build_robust_theta(d);
    if (robustness == Robustness::nested) {
        part = nest(part);
    }
    report.sequence.insert(report.sequence.end(), part.begin(), part.end());
    (is_z_part ? report.z_solve : report.theta_solve) = sol;
    const double residual = quadrilateral_error_vector(d, sol.phi3, sol.phi4).norm();
    report.closure_residual = std::max(report.closure_residual, residual);
}

SynthesisReport synthesize_arbitrary(const Mat2& u, Robustness robustness) {
    if (u.deviation_from_unitary() > 1e-8) {
        throw std::invalid_argument("target matrix is not unitary");
    }
    SynthesisReport report;

    if (infidelity(Mat2::identity(), u) < kIdentityInfidelity) {
        return report;  // trivial target: empty sequence
    }

    // Pure z rotation: both off-diagonals vanish.
    if (std::abs(u.m01) < kDispatchTol && std::abs(u.m10) < kDispatchTol) {
        const double phi = std::arg(u.m11 * std::conj(u.m00));
        append_theta_part(report, z_gate_decomposition(phi), robustness);
        return report;
    }

    // In-plane rotation: real diagonal once the determinant phase is gone.
    const cplx root_det = std::sqrt(u.det());
    const Mat2 v = u * (1.0 / root_det);
    const cplx a = (v.m00 + std::conj(v.m11)) / 2.0;
    const cplx b = (v.m01 - std::conj(v.m10)) / 2.0;
    if (std::abs(a.imag()) < kDispatchTol) {
        const double theta = 2.0 * std::atan2(std::abs(b), a.real());
        const double phi = -std::arg(cplx(0.0, 1.0) * b);
        append_theta_part(report, {theta, 0.0, phi, 0.0}, robustness);
        return report;
    }

    // General path: U = Theta * Z, the z part first in time.
    const TargetDecomposition td = decompose_target(u);
    append_theta_part(report, z_gate_decomposition(td.z_phase), robustness,
                      /*is_z_part=*/true);
    append_theta_part(report, td.theta, robustness);
    return report;
}

}  // namespace

Mat2 hadamard() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
}

Mat2 target_unitary(const TargetKind& kind) {
    return std::visit(
        [](const auto& k) -> Mat2 {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ZGate>) {
                return z_rotation(k.phi);
            } else if constexpr (std::is_same_v<T, HadamardAsym> ||
                                 std::is_same_v<T, HadamardSym>) {
                return hadamard();
            } else if constexpr (std::is_same_v<T, PlanarRotation>) {
                return rotation(k.theta, k.phi);
            } else {
                return k.unitary;
            }
        },
        kind);
}

ThetaDecomposition z_gate_decomposition(double phi) {
    return {kPi, kPi, 0.0, -phi / 2.0};
}

ThetaDecomposition hadamard_asym_decomposition() {
    return {kPi, kPi / 2.0, 3.0 * kPi / 2.0, -3.0 * kPi / 2.0};
}

SymHadamardPhases sym_hadamard_phases() {
    const double root = std::sqrt(295.0);
    return {std::acos((-10.0 - root) / 40.0), std::acos((-10.0 + root) / 40.0)};
}

ErrorVector sym_hadamard_error_vector(double phi1, double phi2) {
    return {
        kPi * (2.0 * std::cos(phi1) + 2.0 * std::cos(phi2) + 1.0),
        kPi * (2.0 * std::sin(phi1) - 2.0 * std::sin(phi2) + 0.5),
        0.0,
    };
}

SynthesisReport synthesize(const TargetSpec& spec) {
    return std::visit(
        [&](const auto& k) -> SynthesisReport {
            using T = std::decay_t<decltype(k)>;
            SynthesisReport report;
            if constexpr (std::is_same_v<T, ZGate>) {
                if (std::abs(std::cos(k.phi / 4.0)) <= kDispatchTol) {
                    throw DegenerateTarget(
                        "z rotation by 2*pi (mod 4*pi): planar diagonal vanishes");
                }
                append_theta_part(report, z_gate_decomposition(k.phi),
                                  spec.robustness);
            } else if constexpr (std::is_same_v<T, HadamardAsym>) {
                append_theta_part(report, hadamard_asym_decomposition(),
                                  spec.robustness);
            } else if constexpr (std::is_same_v<T, HadamardSym>) {
                const SymHadamardPhases ph = sym_hadamard_phases();
                report.sequence = {
                    Pulse(kPi / 4.0, -3.0 * kPi / 2.0),
                    Pulse(kTwoPi, ph.alpha),
                    Pulse(kPi, 0.0),
                    Pulse(kTwoPi, ph.beta),
                    Pulse(kPi / 4.0, 3.0 * kPi / 2.0),
                };
                if (spec.robustness == Robustness::nested) {
                    report.sequence = nest(report.sequence);
                }
                report.closure_residual =
                    sym_hadamard_error_vector(ph.alpha, ph.beta).norm();
            } else if constexpr (std::is_same_v<T, PlanarRotation>) {
                double t = canonical_flip_angle(k.theta);
                if (t > kTwoPi) {
                    t -= kTwoPi;  // same gate up to global sign
                }
                if (t >= kDispatchTol && kTwoPi - t >= kDispatchTol) {
                    append_theta_part(report, {t, 0.0, k.phi, 0.0}, spec.robustness);
                }
                // else: trivial target, empty sequence
            } else {
                report = synthesize_arbitrary(k.unitary, spec.robustness);
            }
            return report;
        },
        spec.kind);
}

Sequence robust_z(double phi, Robustness robustness) {
    return synthesize({ZGate{phi}, robustness}).sequence;
}

Sequence robust_hadamard_asym(Robustness robustness) {
    return synthesize({HadamardAsym{}, robustness}).sequence;
}

Sequence robust_hadamard_sym(Robustness robustness) {
    return synthesize({HadamardSym{}, robustness}).sequence;
}

Sequence robust_planar(double theta, double phi, Robustness robustness) {
    return synthesize({PlanarRotation{theta, phi}, robustness}).sequence;
}

Sequence robust_arbitrary(const Mat2& u, Robustness robustness) {
    return synthesize({ArbitraryGate{u}, robustness}).sequence;
}

}  // namespace planarpulse
