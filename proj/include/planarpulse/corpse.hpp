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

/// Winding numbers of the three CORPSE legs. They must satisfy
/// n1 - n2 + n3 == 0 so that the windings cancel and the sequence
/// reproduces the target exactly; the default (1, 1, 0) is the shortest
/// choice that keeps every flip angle positive for any theta in (0, 2*pi].
struct CorpseWindings {
    int n1 = 1;
    int n2 = 1;
    int n3 = 0;
};

/// k = arcsin(sin(theta/2) / 2), the angle correction shared by the three
/// CORPSE legs.
double corpse_k(double theta);

/// Three-pulse CORPSE replacement for a single pulse, robust against
/// off-resonance errors to first order. Time-ordered output:
///   [(2 n1 pi + theta/2 - k, phi),
///    (2 n2 pi - 2k,          phi + pi),
///    (2 n3 pi + theta/2 - k, phi)].
/// The middle leg runs about the reversed axis, which keeps all three legs
/// collinear: under a pure amplitude error the sequence behaves exactly
/// like the bare pulse, so CORPSE substitution preserves amplitude
/// robustness of an outer construction.
///
/// Throws InvalidWindings if the constraint is violated or any flip angle
/// comes out non-positive (e.g. theta == 0 with the default windings).
Sequence corpse(const Pulse& p, const CorpseWindings& w = {});

/// Replace every non-trivial pulse of a sequence by its CORPSE expansion
/// (default windings), upgrading an amplitude-robust sequence to
/// simultaneous amplitude and off-resonance robustness. Pulses within
/// 1e-9 of a 2*pi flip pass through unchanged (they are already
/// off-resonance robust); zero-angle no-ops are dropped. A four-pulse
/// closure sequence nests to exactly eight pulses.
Sequence nest(const Sequence& seq);

}  // namespace planarpulse
