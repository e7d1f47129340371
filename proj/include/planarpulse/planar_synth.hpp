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

#include "planarpulse/error_model.hpp"
#include "planarpulse/su2.hpp"

namespace planarpulse {

/// Which congruent quadrilateral a solution describes. The two mirror
/// images (reflections across the diagonal) differ only by swapping the
/// phases of the two trivial pulses.
enum class QuadBranch { principal, mirror };

/// Phases of the two 2*pi pulses that close the error quadrilateral, plus
/// the diagonal length they were solved against.
struct QuadSolution {
    double phi3;
    double phi4;
    double r;  // diagonal length, in (0, 4*pi]
    QuadBranch branch;
};

/// Length of the quadrilateral diagonal spanned by the two planar legs:
///   r = sqrt(theta1^2 + theta2^2 + 2 theta1 theta2 cos(phi2)).
/// Always satisfies r <= theta1 + theta2.
double diagonal_r(const ThetaDecomposition& d);

/// True iff a single 2*pi pulse could close the error polygon, i.e.
/// |r - 2*pi| < tol. No single-pulse synthesis path is offered; one
/// trivial pulse cannot close the triangle when r > 2*pi, so the general
/// construction always uses two.
bool single_2pi_feasible(const ThetaDecomposition& d, double tol = 1e-9);

/// Solve the closure condition for the trivial-pulse phases:
///   phi3 = pi + phi1 + phi2 - arcsin(theta2 sin(phi2) / r) - arccos(r / 4pi)
///   phi4 = pi + phi3 - arccos(1 - r^2 / 8pi^2)
/// The arcsin principal value is wrong when the diagonal-opening angle is
/// obtuse; the solver falls back to the supplementary angle, then to the
/// mirrored quadrilateral, validating each candidate against
/// quadrilateral_error_vector before returning. Outputs are normalized to
/// [0, 2*pi). Flip angles are clamped into [0, 2*pi].
///
/// Throws DegenerateTarget when r < 1e-9 (trivial or anti-parallel legs)
/// and InfeasibleClosure if no candidate closes (unreachable for valid
/// inputs).
QuadSolution solve_quadrilateral(const ThetaDecomposition& d);

/// The bare two-pulse realization [(theta1, phi1+phi2), (theta2, phi1)],
/// not robust against anything. Zero-angle legs are omitted.
Sequence bare_theta(const ThetaDecomposition& d);

/// Amplitude-robust four-pulse realization of the planar part, in time
/// order:
///   [(theta1, phi1+phi2), (2pi, phi3), (2pi, phi4), (theta2, phi1)].
/// Composes to theta_unitary(d) up to global phase; its first-order
/// amplitude-error generator vanishes. Zero-angle legs are omitted, so a
/// single-leg decomposition yields three pulses.
Sequence build_robust_theta(const ThetaDecomposition& d);

}  // namespace planarpulse
