// Copyright 2026 the qbcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qbcap {

struct NonHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPSD : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotTracePreserving : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotCP : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionCap : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TargetOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EnergyOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qbcap
