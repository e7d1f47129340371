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

#include "planarpulse/su2.hpp"

namespace planarpulse {

/// Systematic control errors. epsilon scales every flip angle,
/// theta -> (1+epsilon) theta; f adds an unwanted sz term of relative
/// strength f to the drive axis. Both are dimensionless; any finite value
/// is accepted so that sweeps can leave the perturbative regime.
struct ErrorParams {
    double epsilon = 0.0;
    double f = 0.0;
};

/// Real 3-vector, used for first-order error generators.
struct ErrorVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

/// Exact propagator of a pulse under both errors: a rotation by
/// theta (1+epsilon) sqrt(1+f^2) about the tilted unit axis
/// (cos phi, sin phi, f) / sqrt(1+f^2). The off-resonance term lives
/// inside the pulse (it scales with the drive), so idle periods accrue no
/// error. Unitary for all finite parameters.
Mat2 faulty_pulse(const Pulse& p, const ErrorParams& err);

/// Time-ordered product of faulty_pulse over the sequence.
Mat2 faulty_compose(const Sequence& seq, const ErrorParams& err);

/// First-order expansion of the faulty propagator,
///   (I - i (eps theta / 2) n(phi).sigma) R(theta, phi) - i f sin(theta/2) sz.
/// Not unitary in general; the residual against faulty_pulse is second
/// order in (epsilon, f) jointly. Kept for cross-checks.
Mat2 first_order_pulse(const Pulse& p, const ErrorParams& err);

/// First-order amplitude-error generator g of a sequence, defined through
///   faulty_compose(seq, eps, 0) = (I - i eps g.sigma / 2 + O(eps^2)) compose(seq).
/// Extracted by a central finite difference in epsilon at step 1e-6 and
/// projected onto the Pauli basis; accurate to roughly 1e-9 absolute, well
/// below the 1e-4 robustness threshold. A sequence is amplitude-robust to
/// first order iff |g| is small. Requires a nonempty sequence.
ErrorVector amplitude_error_generator(const Sequence& seq);

/// Closure sum of the four-pulse construction:
///   theta1 n(phi1+phi2) + 2pi n(phi3) + 2pi n(phi4) + theta2 n(phi1),
/// with n(phi) = (cos phi, sin phi, 0). Its vanishing is the amplitude
/// robustness condition; the z component is always zero.
ErrorVector quadrilateral_error_vector(const ThetaDecomposition& d, double phi3,
                                       double phi4);

}  // namespace planarpulse
