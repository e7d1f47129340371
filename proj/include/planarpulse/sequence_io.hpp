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
#include <string>

#include "planarpulse/gate_targets.hpp"
#include "planarpulse/su2.hpp"

namespace planarpulse {

/// Solver metadata carried alongside a sequence produced by the planar
/// closure construction.
struct SequenceProvenance {
    double phi3;
    double phi4;
    double r;
    QuadBranch branch;

    bool operator==(const SequenceProvenance&) const = default;
};

/// Portable sequence file. Pulses are stored in TIME ORDER (first applied
/// first); the format states this explicitly in its pulse_order field.
/// Angles are radians, written with 17 significant digits so the document
/// round-trips doubles losslessly.
struct SequenceDocument {
    int version = 1;
    std::string target;      // canonical target description, see below
    std::string robustness;  // "ae", "nested" or "none"
    Sequence pulses;
    std::optional<SequenceProvenance> provenance;

    bool operator==(const SequenceDocument&) const = default;
};

/// Canonical target grammar:
///   hadamard
///   hadamard-sym
///   z:<phi>
///   rot:<theta>,<phi>
///   arbitrary:<m00>,<m01>,<m10>,<m11>   (complex entries as re+imj)
std::string format_target(const TargetKind& kind);
TargetKind parse_target(const std::string& text);

std::string format_robustness(Robustness r);
Robustness parse_robustness(const std::string& text);

/// "re+imj" complex literals, e.g. "0.5-0.5j", "1", "2j".
std::string format_complex(cplx z);
cplx parse_complex(const std::string& text);

std::string serialize(const SequenceDocument& doc);
SequenceDocument parse_document(const std::string& text);

/// File helpers; read/parse errors surface as DocumentParseError.
void save_document(const SequenceDocument& doc, const std::string& path);
SequenceDocument load_document(const std::string& path);

}  // namespace planarpulse
