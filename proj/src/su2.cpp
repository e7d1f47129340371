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

#include "planarpulse/su2.hpp"

#include <algorithm>
#include <cmath>

namespace planarpulse {

namespace {

double max4(double a, double b, double c, double d) {
    return std::max(std::max(a, b), std::max(c, d));
}

}  // namespace

double Mat2::max_abs_diff(const Mat2& o) const {
    return max4(std::abs(m00 - o.m00), std::abs(m01 - o.m01),
                std::abs(m10 - o.m10), std::abs(m11 - o.m11));
}

double Mat2::deviation_from_unitary() const {
    return (adjoint() * *this).max_abs_diff(Mat2::identity());
}

double normalize_angle(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {  // fmod dust for tiny negative inputs
        r -= kTwoPi;
    }
    return r;
}

double canonical_flip_angle(double theta) {
    double r = std::fmod(theta, 2.0 * kTwoPi);
    if (r < 0.0) {
        r += 2.0 * kTwoPi;
    }
    if (r >= 2.0 * kTwoPi) {
        r -= 2.0 * kTwoPi;
    }
    return r;
}

Pulse::Pulse(double theta_, double phi_) : theta(theta_), phi(normalize_angle(phi_)) {
    if (!std::isfinite(theta_) || !std::isfinite(phi_)) {
        throw std::invalid_argument("pulse angles must be finite");
    }
    if (theta_ < 0.0) {
        throw std::invalid_argument("pulse flip angle must be non-negative");
    }
}

Mat2 rotation(double theta, double phi) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const double nx = std::cos(phi);
    const double ny = std::sin(phi);
    return {cplx(c, 0.0), cplx(-s * ny, -s * nx), cplx(s * ny, -s * nx),
            cplx(c, 0.0)};
}

Mat2 z_rotation(double phi) {
    return {std::polar(1.0, -phi / 2.0), 0.0, 0.0, std::polar(1.0, phi / 2.0)};
}

Mat2 compose(const Sequence& seq) {
    Mat2 u = Mat2::identity();
    for (const Pulse& p : seq) {
        u = pulse_unitary(p) * u;
    }
    return u;
}

double infidelity(const Mat2& target, const Mat2& actual) {
    const double overlap = std::abs((target.adjoint() * actual).trace()) / 2.0;
    const double value = 1.0 - overlap;
    return value < 0.0 ? 0.0 : value;
}

bool equal_up_to_phase(const Mat2& a, const Mat2& b, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    return infidelity(a, b) < tol;
}

Mat2 theta_unitary(const ThetaDecomposition& d) {
    return rotation(d.theta2, d.phi1) * rotation(d.theta1, d.phi1 + d.phi2);
}

Mat2 decomposition_unitary(const TargetDecomposition& td) {
    const ThetaDecomposition& d = td.theta;
    return rotation(d.theta2, d.phi1) * z_rotation(d.phi2) *
           rotation(d.theta1, d.phi1);
}

TargetDecomposition decompose_target(const Mat2& u) {
    if (u.deviation_from_unitary() > 1e-8) {
        throw std::invalid_argument("decompose_target requires a unitary matrix");
    }

    // Normalize the determinant phase away, then read off the det-1 form
    // [[a, b], [-conj(b), conj(a)]], averaging the redundant entries.
    const cplx root_det = std::sqrt(u.det());
    const Mat2 v = u * (1.0 / root_det);
    cplx a = (v.m00 + std::conj(v.m11)) / 2.0;
    cplx b = (v.m01 - std::conj(v.m10)) / 2.0;

    // With equal legs theta1 = theta2 = p and half z phase h = phi2 / 2 the
    // matrix entries are
    //   a = cos(h) cos(p) - i sin(h),
    //   b = -i e^{-i phi1} cos(h) sin(p).
    // Flip the overall sign if needed so that p lands in [pi/2, pi]; this
    // keeps the planar legs long for targets near a z rotation.
    if (std::atan2(std::abs(b), a.real()) < kPi / 2.0) {
        a = -a;
        b = -b;
    }

    // asin keeps cos(h) >= 0, matching the branch used above.
    const double sin_h = std::clamp(-a.imag(), -1.0, 1.0);
    const double h = std::asin(sin_h);
    const double p = std::atan2(std::abs(b), a.real());

    double phi1 = 0.0;
    if (std::abs(b) > 1e-15) {
        phi1 = normalize_angle(-std::arg(cplx(0.0, 1.0) * b));
    }

    const TargetDecomposition td{{p, p, phi1, 2.0 * h}, 2.0 * h};
    const Mat2 rebuilt = rotation(p, phi1) * z_rotation(2.0 * h) * rotation(p, phi1);
    if (infidelity(u, rebuilt) >= 1e-10) {
        throw DecompositionError("planar/z factorization failed to reproduce input");
    }
    return td;
}

}  // namespace planarpulse
