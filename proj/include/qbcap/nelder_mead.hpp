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
#include <span>
#include <vector>

namespace qbcap {

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    long iterations = 0;
};

/// Classic downhill simplex (reflection 1, expansion 2, contraction 0.5,
/// shrink 0.5). Deterministic: ties are broken by vertex index. Stops when
/// the simplex f-spread drops below ftol * (1 + |f_best|) or after max_iters.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, double initial_step, long max_iters,
                             double ftol);

}  // namespace qbcap
