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

#include <functional>
#include <string>
#include <vector>

#include "qbcap/qops.hpp"

namespace qbcap {

struct MadParams {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
};

/// Qutrit multilevel amplitude damping. The map is specified entrywise on the
/// output matrix; a Kraus form is recovered from the spectral decomposition of
/// the Choi matrix (eigenvalues above 1e-12 kept, below -1e-10 rejected as
/// NotCP).
KrausChannel make_mad(const MadParams& p);

/// Resonant variant: mixes the 01 coherence with the 12 one.
KrausChannel make_remad(const MadParams& p);

KrausChannel make_depolarizing(std::size_t dim, double p);

KrausChannel make_qubit_ad(double gamma);

/// Kraus form of an arbitrary Hermiticity-preserving, trace-preserving map
/// given as an output-matrix function. Shared Choi-route used by make_mad and
/// make_remad; exposed for tests.
KrausChannel kraus_from_map(const std::function<Mat(const Mat&)>& map, std::size_t dim_in,
                            std::size_t dim_out);

enum class ChannelKind {
    identity,
    depolarizing,
    qubit_amplitude_damping,
    mad,
    remad,
    custom_kraus,
};

/// Parsed channel description; the deserialization target of the CLI's JSON
/// configs.
struct ChannelSpec {
    ChannelKind kind = ChannelKind::identity;
    std::size_t dim = 3;
    std::vector<double> params;
    std::vector<Mat> kraus;  // custom_kraus only

    KrausChannel build() const;
    std::string describe() const;

    /// Throws InvalidParams naming the offending field.
    static ChannelSpec from_json_text(const std::string& text);
};

}  // namespace qbcap
