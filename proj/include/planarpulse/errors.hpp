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

#include <stdexcept>
#include <string>

namespace planarpulse {

/// Target gate is trivial or its planar decomposition collapses (zero-length
/// diagonal), so no closure construction exists for it.
class DegenerateTarget : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// No phase assignment of the two trivial pulses closes the error polygon.
/// Unreachable for in-range inputs; indicates a bug when thrown.
class InfeasibleClosure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Winding numbers violate their constraint or produce a non-positive flip
/// angle.
class InvalidWindings : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Fewer than three usable sample points for a scaling-exponent fit.
class InsufficientData : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure: a decomposition did not reproduce its input.
class DecompositionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Sequence document or target description could not be parsed.
class DocumentParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace planarpulse
