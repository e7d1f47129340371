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

#include "planarpulse/error_model.hpp"

#include <cmath>

namespace planarpulse {

namespace {

// cos(angle/2) I - i sin(angle/2) (ux sx + uy sy + uz sz), |u| = 1.
Mat2 axis_rotation(double angle, double ux, double uy, double uz) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return {cplx(c, -s * uz), cplx(-s * uy, -s * ux), cplx(s * uy, -s * ux),
            cplx(c, s * uz)};
}

constexpr double kGeneratorStep = 1e-6;

}  // namespace

double ErrorVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

Mat2 faulty_pulse(const Pulse& p, const ErrorParams& err) {
    const double tilt = std::sqrt(1.0 + err.f * err.f);
    const double angle = p.theta * (1.0 + err.epsilon) * tilt;
    return axis_rotation(angle, std::cos(p.phi) / tilt, std::sin(p.phi) / tilt,
                         err.f / tilt);
}

Mat2 faulty_compose(const Sequence& seq, const ErrorParams& err) {
    Mat2 u = Mat2::identity();
    for (const Pulse& p : seq) {
        u = faulty_pulse(p, err) * u;
    }
    return u;
}

Mat2 first_order_pulse(const Pulse& p, const ErrorParams& err) {
    const Mat2 ideal = rotation(p.theta, p.phi);
    // Linearized amplitude factor: the leading term of the extra rotation
    // (eps theta) about the pulse axis. A scalar 1 - i eps theta / 2 would
    // leave a first-order residual; the axis matrix is required.
    const double a = err.epsilon * p.theta / 2.0;
    const Mat2 amplitude{1.0, cplx(0.0, -a) * std::polar(1.0, -p.phi),
                         cplx(0.0, -a) * std::polar(1.0, p.phi), 1.0};
    const cplx z_term(0.0, -err.f * std::sin(p.theta / 2.0));
    const Mat2 sz{1.0, 0.0, 0.0, -1.0};
    return amplitude * ideal + z_term * sz;
}

ErrorVector amplitude_error_generator(const Sequence& seq) {
    if (seq.empty()) {
        throw std::invalid_argument("generator extraction needs a nonempty sequence");
    }
    const double h = kGeneratorStep;
    const Mat2 plus = faulty_compose(seq, {h, 0.0});
    const Mat2 minus = faulty_compose(seq, {-h, 0.0});
    const Mat2 ideal_adj = compose(seq).adjoint();

    // faulty = (I - i eps g.sigma/2) ideal + O(eps^2), so
    // g.sigma = i (faulty(+h) - faulty(-h)) ideal^dag / h.
    const Mat2 g_sigma = cplx(0.0, 1.0) * ((plus - minus) * ideal_adj) * (1.0 / h);
    return {
        (g_sigma.m01 + g_sigma.m10).real() / 2.0,
        (g_sigma.m10 - g_sigma.m01).imag() / 2.0,
        (g_sigma.m00 - g_sigma.m11).real() / 2.0,
    };
}

ErrorVector quadrilateral_error_vector(const ThetaDecomposition& d, double phi3,
                                       double phi4) {
    const double a1 = d.phi1 + d.phi2;
    return {
        d.theta1 * std::cos(a1) + kTwoPi * std::cos(phi3) +
            kTwoPi * std::cos(phi4) + d.theta2 * std::cos(d.phi1),
        d.theta1 * std::sin(a1) + kTwoPi * std::sin(phi3) +
            kTwoPi * std::sin(phi4) + d.theta2 * std::sin(d.phi1),
        0.0,
    };
}

}  // namespace planarpulse
