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

#include "qbcap/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qbcap {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, double initial_step, long max_iters,
                             double ftol) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> xs(n + 1, std::vector<double>(x0.begin(), x0.end()));
    for (std::size_t i = 0; i < n; ++i) xs[i + 1][i] += initial_step;
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), cand(n);
    long it = 0;
    for (; it < max_iters; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
        if (fs[worst] - fs[best] <= ftol * (1.0 + std::abs(fs[best]))) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) centroid[i] += xs[order[k]][i];
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {  // c + t * (c - x_worst)
            for (std::size_t i = 0; i < n; ++i)
                cand[i] = centroid[i] + t * (centroid[i] - xs[worst][i]);
            return f(cand);
        };

        const double fr = blend(1.0);
        if (fr < fs[best]) {
            std::vector<double> xr = cand;
            const double fe = blend(2.0);
            if (fe < fr) {
                xs[worst] = cand;
                fs[worst] = fe;
            } else {
                xs[worst] = std::move(xr);
                fs[worst] = fr;
            }
        } else if (fr < fs[second]) {
            xs[worst] = cand;
            fs[worst] = fr;
        } else {
            const double fc = fr < fs[worst] ? blend(0.5) : blend(-0.5);
            if (fc < std::min(fr, fs[worst])) {
                xs[worst] = cand;
                fs[worst] = fc;
            } else {
                for (std::size_t k = 1; k <= n; ++k) {
                    const std::size_t v = order[k];
                    for (std::size_t i = 0; i < n; ++i)
                        xs[v][i] = 0.5 * (xs[v][i] + xs[best][i]);
                    fs[v] = f(xs[v]);
                }
            }
        }
    }
    const std::size_t best =
        static_cast<std::size_t>(std::min_element(fs.begin(), fs.end()) - fs.begin());
    return {xs[best], fs[best], it};
}

}  // namespace qbcap
