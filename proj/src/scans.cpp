// Copyright 2026 The eoftangle Authors
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

#include "eoftangle/scans.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eoftangle/errors.hpp"
#include "eoftangle/monogamy.hpp"
#include "eoftangle/state_factory.hpp"

namespace eoft {

std::vector<double> open_interior_grid(int n, double lo, double hi) {
    if (n < 1 || !(hi > lo)) {
        throw ArgumentError("interior grid needs n >= 1 and hi > lo");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (i + 1) * (hi - lo) / (n + 1);
    }
    return out;
}

WScanRow w_point(double theta, double phi) {
    const TangleReport r = tau_total(w({theta, phi}));
    return {theta, phi, r.tau_total, r.tau[0], r.tau[1], r.tau[2]};
}

std::vector<WScanRow> scan_w(int n_theta, int n_phi, Execution exec) {
    if (n_theta < 2 || n_phi < 2) {
        throw ArgumentError("scan grid resolutions must be at least 2");
    }
    const auto thetas = open_interior_grid(n_theta, 0.0, std::numbers::pi / 2.0);
    const auto phis = open_interior_grid(n_phi, 0.0, std::numbers::pi / 2.0);
    return parallel_map(
        thetas.size() * phis.size(),
        [&](std::size_t k) { return w_point(thetas[k / phis.size()], phis[k % phis.size()]); }, exec);
}

GhzScanRow ghz_point(double theta, double phi) {
    const TangleReport r = tau_total(ghz(std::cos(theta), std::polar(std::sin(theta), phi)));
    double max_discord = 0.0;
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            if (x != y) {
                max_discord = std::max(max_discord, r.discord[x][y]);
            }
        }
    }
    return {theta, phi, r.tau_total, r.tau[0], r.tau[1], r.tau[2], max_discord};
}

std::vector<GhzScanRow> scan_ghz(int n_theta, int n_phi, Execution exec) {
    if (n_theta < 2 || n_phi < 2) {
        throw ArgumentError("scan grid resolutions must be at least 2");
    }
    const auto thetas = open_interior_grid(n_theta, 0.0, std::numbers::pi / 2.0);
    std::vector<double> phis(static_cast<std::size_t>(n_phi));
    for (int j = 0; j < n_phi; ++j) {
        phis[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / n_phi;
    }
    return parallel_map(
        thetas.size() * phis.size(),
        [&](std::size_t k) { return ghz_point(thetas[k / phis.size()], phis[k % phis.size()]); }, exec);
}

} // namespace eoft
