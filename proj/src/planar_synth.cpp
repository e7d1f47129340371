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

#include "planarpulse/planar_synth.hpp"

#include <algorithm>
#include <cmath>

namespace planarpulse {

namespace {

constexpr double kClosureTol = 1e-10;
constexpr double kDegenerateR = 1e-9;
constexpr double kZeroLeg = 1e-12;

ThetaDecomposition clamped(const ThetaDecomposition& d) {
    ThetaDecomposition c = d;
    c.theta1 = std::clamp(c.theta1, 0.0, kTwoPi);
    c.theta2 = std::clamp(c.theta2, 0.0, kTwoPi);
    return c;
}

double closure_residual(const ThetaDecomposition& d, double phi3, double phi4) {
    return quadrilateral_error_vector(d, phi3, phi4).norm();
}

}  // namespace

double diagonal_r(const ThetaDecomposition& d_in) {
    const ThetaDecomposition d = clamped(d_in);
    const double r2 = d.theta1 * d.theta1 + d.theta2 * d.theta2 +
                      2.0 * d.theta1 * d.theta2 * std::cos(d.phi2);
    return std::sqrt(std::max(0.0, r2));
}

bool single_2pi_feasible(const ThetaDecomposition& d, double tol) {
    return std::abs(diagonal_r(d) - kTwoPi) < tol;
}

QuadSolution solve_quadrilateral(const ThetaDecomposition& d_in) {
    const ThetaDecomposition d = clamped(d_in);
    const double r = diagonal_r(d);
    if (r < kDegenerateR) {
        throw DegenerateTarget(
            "planar legs cancel: no quadrilateral exists for a trivial target");
    }

    // Direction of the closing diagonal is pi + phi1 + phi2 - s, where s is
    // the signed angle the diagonal opens against the first leg. Its sine
    // is theta2 sin(phi2) / r; the principal arcsin is correct when that
    // angle is acute and its supplement when obtuse. eta is the half-spread
    // of the two trivial legs over the diagonal, delta the apex angle of
    // their isosceles triangle.
    const double s = std::asin(std::clamp(d.theta2 * std::sin(d.phi2) / r, -1.0, 1.0));
    const double eta = std::acos(std::clamp(r / (2.0 * kTwoPi), -1.0, 1.0));
    const double delta =
        std::acos(std::clamp(1.0 - r * r / (2.0 * kTwoPi * kTwoPi), -1.0, 1.0));
    const double base = kPi + d.phi1 + d.phi2;

    struct Candidate {
        double phi3;
        double phi4;
        QuadBranch branch;
    };
    Candidate candidates[4];
    int count = 0;
    for (double s_branch : {s, kPi - s}) {
        const double phi3 = normalize_angle(base - s_branch - eta);
        const double phi4 = normalize_angle(kPi + phi3 - delta);
        candidates[count++] = {phi3, phi4, QuadBranch::principal};
        // Mirror image across the diagonal: the trivial-pulse phases swap.
        candidates[count++] = {phi4, phi3, QuadBranch::mirror};
    }
    for (int i = 0; i < count; ++i) {
        if (closure_residual(d, candidates[i].phi3, candidates[i].phi4) < kClosureTol) {
            return {candidates[i].phi3, candidates[i].phi4, r, candidates[i].branch};
        }
    }

    // The arcsin route loses precision when its argument sits at +-1.
    // Recompute the diagonal direction directly; same branch, stable form.
    const double acx = d.theta2 * std::cos(d.phi1) + d.theta1 * std::cos(d.phi1 + d.phi2);
    const double acy = d.theta2 * std::sin(d.phi1) + d.theta1 * std::sin(d.phi1 + d.phi2);
    const double psi = std::atan2(-acy, -acx);
    const double phi3 = normalize_angle(psi - eta);
    const double phi4 = normalize_angle(psi + eta);
    if (closure_residual(d, phi3, phi4) < kClosureTol) {
        return {phi3, phi4, r, QuadBranch::principal};
    }
    throw InfeasibleClosure("no trivial-pulse phases close the error polygon");
}

Sequence bare_theta(const ThetaDecomposition& d_in) {
    const ThetaDecomposition d = clamped(d_in);
    Sequence seq;
    if (d.theta1 > kZeroLeg) {
        seq.emplace_back(d.theta1, d.phi1 + d.phi2);
    }
    if (d.theta2 > kZeroLeg) {
        seq.emplace_back(d.theta2, d.phi1);
    }
    return seq;
}

Sequence build_robust_theta(const ThetaDecomposition& d_in) {
    const ThetaDecomposition d = clamped(d_in);
    const QuadSolution sol = solve_quadrilateral(d);
    Sequence seq;
    if (d.theta1 > kZeroLeg) {
        seq.emplace_back(d.theta1, d.phi1 + d.phi2);
    }
    seq.emplace_back(kTwoPi, sol.phi3);
    seq.emplace_back(kTwoPi, sol.phi4);
    if (d.theta2 > kZeroLeg) {
        seq.emplace_back(d.theta2, d.phi1);
    }
    return seq;
}

}  // namespace planarpulse
