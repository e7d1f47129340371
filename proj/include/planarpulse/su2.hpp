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

#include <complex>
#include <vector>

#include "planarpulse/errors.hpp"

namespace planarpulse {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// 2x2 complex matrix, row-major. Used throughout for single-qubit
/// propagators; most instances are unitary, but the type itself does not
/// enforce unitarity (first-order error expansions are not unitary).
struct Mat2 {
    cplx m00{0.0}, m01{0.0}, m10{0.0}, m11{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Mat2 operator+(const Mat2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    Mat2 operator-(const Mat2& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
    Mat2 operator*(cplx s) const { return {s * m00, s * m01, s * m10, s * m11}; }

    Mat2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    cplx trace() const { return m00 + m11; }
    cplx det() const { return m00 * m11 - m01 * m10; }

    /// Largest entrywise |difference| to another matrix.
    double max_abs_diff(const Mat2& o) const;

    /// Largest entrywise deviation of adjoint()*this from the identity.
    double deviation_from_unitary() const;

    bool is_unitary(double tol = 1e-12) const {
        return deviation_from_unitary() <= tol;
    }
};

using Unitary2 = Mat2;

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

/// Reduce an angle into [0, 2*pi).
double normalize_angle(double phi);

/// Reduce a flip angle modulo 4*pi into [0, 4*pi). Rotations are 4*pi
/// periodic in the flip angle; a 2*pi shift only flips the global sign.
/// Synthesis uses this opt-in; stored pulses keep their windings.
double canonical_flip_angle(double theta);

/// One elementary rotation: flip angle theta about the in-plane axis with
/// azimuth phi. Phase is normalized into [0, 2*pi) on construction; theta
/// must be finite and >= 0 (zero is the degenerate no-op).
struct Pulse {
    double theta;
    double phi;

    Pulse(double theta_, double phi_);

    bool operator==(const Pulse&) const = default;
};

/// Time-ordered pulse list: front() is applied first. Note that operator
/// products run the other way (last applied leftmost); compose() takes care
/// of the reversal.
using Sequence = std::vector<Pulse>;

/// Propagator of an ideal pulse:
///   cos(theta/2) I - i sin(theta/2) (cos(phi) sx + sin(phi) sy).
Mat2 rotation(double theta, double phi);

/// exp(-i phi sz / 2) = diag(e^{-i phi/2}, e^{+i phi/2}).
Mat2 z_rotation(double phi);

inline Mat2 pulse_unitary(const Pulse& p) { return rotation(p.theta, p.phi); }

/// Product of the sequence's propagators in time order (first pulse acts
/// first, i.e. rightmost in the operator product). Empty -> identity.
Mat2 compose(const Sequence& seq);

/// Gate distance 1 - |Tr(target^dag actual)| / 2, insensitive to global
/// phases of either argument. Returns a value in [0, 1] for unitary inputs.
double infidelity(const Mat2& target, const Mat2& actual);

/// True iff infidelity(a, b) < tol. Requires tol > 0.
bool equal_up_to_phase(const Mat2& a, const Mat2& b, double tol);

/// Parameters of the planar part of a gate factorization:
///   (theta2 about phi1) (theta1 about phi1+phi2),
/// written as an operator product (theta1 leg acts first in time).
struct ThetaDecomposition {
    double theta1;
    double theta2;
    double phi1;
    double phi2;
};

/// Propagator of the two-pulse planar part.
Mat2 theta_unitary(const ThetaDecomposition& d);

/// Planar part plus the z rotation it was split from.
struct TargetDecomposition {
    ThetaDecomposition theta;
    double z_phase;  // the gate factors as theta_unitary * z_rotation(z_phase)
};

/// Propagator of the full factorization
///   rotation(theta2, phi1) z_rotation(phi2) rotation(theta1, phi1).
Mat2 decomposition_unitary(const TargetDecomposition& td);

/// Factor an arbitrary unitary as
///   U = rotation(theta2, phi1) z_rotation(phi2) rotation(theta1, phi1)
/// up to global phase. The returned branch has theta1 == theta2 in
/// [pi/2, pi], which keeps the planar legs away from the degenerate
/// zero-length case for every input that is not itself a z rotation.
/// The reconstruction is verified to infidelity < 1e-10 before returning;
/// DecompositionError signals an internal inconsistency.
TargetDecomposition decompose_target(const Mat2& u);

}  // namespace planarpulse
