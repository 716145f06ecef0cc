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

#include "eoftangle/sphere_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "eoftangle/errors.hpp"

namespace eoft {

namespace {

struct Vertex {
    double theta;
    double phi;
    double value;
};

Vertex nelder_mead(const std::function<double(double, double)>& f, Vertex start, double step_theta, double step_phi,
                   const SphereSearchSettings& settings, int& evaluations) {
    auto eval = [&](double t, double p) {
        ++evaluations;
        return Vertex{t, p, f(t, p)};
    };
    const int budget = evaluations + settings.max_refine_evaluations;
    std::array<Vertex, 3> s{start, eval(start.theta + step_theta, start.phi),
                            eval(start.theta, start.phi + step_phi)};
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };

    while (evaluations < budget) {
        std::sort(s.begin(), s.end(), by_value);
        if (s[2].value - s[0].value <= settings.tolerance) {
            break;
        }
        const double ct = 0.5 * (s[0].theta + s[1].theta);
        const double cp = 0.5 * (s[0].phi + s[1].phi);
        const Vertex reflected = eval(2.0 * ct - s[2].theta, 2.0 * cp - s[2].phi);
        if (reflected.value < s[0].value) {
            const Vertex expanded = eval(3.0 * ct - 2.0 * s[2].theta, 3.0 * cp - 2.0 * s[2].phi);
            s[2] = expanded.value < reflected.value ? expanded : reflected;
            continue;
        }
        if (reflected.value < s[1].value) {
            s[2] = reflected;
            continue;
        }
        const bool outside = reflected.value < s[2].value;
        const Vertex& anchor = outside ? reflected : s[2];
        const Vertex contracted = eval(0.5 * (ct + anchor.theta), 0.5 * (cp + anchor.phi));
        if (contracted.value < anchor.value) {
            s[2] = contracted;
            continue;
        }
        for (std::size_t i = 1; i < s.size(); ++i) {
            s[i] = eval(0.5 * (s[0].theta + s[i].theta), 0.5 * (s[0].phi + s[i].phi));
        }
    }
    return *std::min_element(s.begin(), s.end(), by_value);
}

} // namespace

SpherePoint canonical_point(double theta, double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) {
        theta += two_pi;
    }
    if (theta > std::numbers::pi) {
        theta = two_pi - theta;
        phi += std::numbers::pi;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) {
        phi += two_pi;
    }
    return {theta, phi};
}

SphereMinimum minimize_on_sphere(const std::function<double(double, double)>& objective,
                                 const SphereSearchSettings& settings) {
    if (settings.grid_theta < 2 || settings.grid_phi < 1 || settings.starts < 1 || settings.tolerance <= 0.0) {
        throw ArgumentError("invalid sphere search settings");
    }
    const double dtheta = std::numbers::pi / (settings.grid_theta - 1);
    const double dphi = 2.0 * std::numbers::pi / settings.grid_phi;

    int evaluations = 0;
    std::vector<Vertex> grid;
    grid.reserve(static_cast<std::size_t>(settings.grid_theta * settings.grid_phi));
    for (int i = 0; i < settings.grid_theta; ++i) {
        const double theta = i * dtheta;
        const bool pole = i == 0 || i == settings.grid_theta - 1;
        // Every phi names the same direction at a pole.
        const int n_phi = pole ? 1 : settings.grid_phi;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = j * dphi;
            grid.push_back({theta, phi, objective(theta, phi)});
            ++evaluations;
        }
    }

    const auto starts = std::min<std::size_t>(static_cast<std::size_t>(settings.starts), grid.size());
    std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(),
                      [](const Vertex& a, const Vertex& b) { return a.value < b.value; });

    Vertex best = grid.front();
    for (std::size_t k = 0; k < starts; ++k) {
        const Vertex refined = nelder_mead(objective, grid[k], dtheta, dphi, settings, evaluations);
        if (refined.value < best.value) {
            best = refined;
        }
    }
    return {canonical_point(best.theta, best.phi), best.value, evaluations};
}

} // namespace eoft
