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

#include "planarpulse/corpse.hpp"

#include <cmath>

namespace planarpulse {

namespace {

constexpr double kTrivialTol = 1e-9;
constexpr double kZeroLeg = 1e-12;

}  // namespace

double corpse_k(double theta) { return std::asin(std::sin(theta / 2.0) / 2.0); }

Sequence corpse(const Pulse& p, const CorpseWindings& w) {
    if (w.n1 - w.n2 + w.n3 != 0) {
        throw InvalidWindings("winding numbers must satisfy n1 - n2 + n3 == 0");
    }
    const double k = corpse_k(p.theta);
    const double a1 = kTwoPi * w.n1 + p.theta / 2.0 - k;
    const double a2 = kTwoPi * w.n2 - 2.0 * k;
    const double a3 = kTwoPi * w.n3 + p.theta / 2.0 - k;
    if (a1 <= 0.0 || a2 <= 0.0 || a3 <= 0.0) {
        throw InvalidWindings("windings produce a non-positive flip angle");
    }
    return {
        Pulse(a1, p.phi),
        Pulse(a2, p.phi + kPi),
        Pulse(a3, p.phi),
    };
}

Sequence nest(const Sequence& seq) {
    Sequence out;
    out.reserve(seq.size() * 3);
    for (const Pulse& p : seq) {
        if (std::abs(p.theta - kTwoPi) < kTrivialTol) {
            out.push_back(p);
        } else if (p.theta < kZeroLeg) {
            continue;  // no-op pulse, nothing to protect
        } else {
            const Sequence c = corpse(p);
            out.insert(out.end(), c.begin(), c.end());
        }
    }
    return out;
}

}  // namespace planarpulse
