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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eoftangle/sphere_search.hpp"

namespace eoft {
namespace {

double distance_objective(double theta, double phi, double t0, double p0) {
    // 1 - n(theta, phi) . n(t0, p0): zero exactly at the target direction.
    const double dot = std::sin(theta) * std::sin(t0) * std::cos(phi - p0) + std::cos(theta) * std::cos(t0);
    return 1.0 - dot;
}

TEST(SphereSearch, FindsInteriorMinimum) {
    const double t0 = 1.234;
    const double p0 = 4.321;
    const SphereMinimum m =
        minimize_on_sphere([&](double t, double p) { return distance_objective(t, p, t0, p0); });
    EXPECT_NEAR(m.value, 0.0, 1e-8);
    EXPECT_NEAR(m.point.theta, t0, 1e-3);
    EXPECT_NEAR(m.point.phi, p0, 1e-3);
    EXPECT_GT(m.evaluations, 0);
}

TEST(SphereSearch, FindsPoles) {
    const SphereMinimum north = minimize_on_sphere([](double t, double) { return 1.0 - std::cos(t); });
    EXPECT_NEAR(north.value, 0.0, 1e-12);
    const SphereMinimum south = minimize_on_sphere([](double t, double) { return 1.0 + std::cos(t); });
    EXPECT_NEAR(south.value, 0.0, 1e-12);
}

TEST(SphereSearch, NeverWorseThanGrid) {
    // A rugged objective: the result must be at most the best coarse-grid value.
    auto f = [](double t, double p) { return std::sin(3 * t) * std::cos(5 * p) + 0.1 * t; };
    const SphereSearchSettings settings;
    double grid_best = 1e300;
    for (int i = 0; i < settings.grid_theta; ++i) {
        for (int j = 0; j < settings.grid_phi; ++j) {
            const double t = std::numbers::pi * i / (settings.grid_theta - 1);
            const double p = 2 * std::numbers::pi * j / settings.grid_phi;
            grid_best = std::min(grid_best, f(t, p));
        }
    }
    EXPECT_LE(minimize_on_sphere(f, settings).value, grid_best + 1e-15);
}

TEST(SphereSearch, CanonicalPoint) {
    const SpherePoint p = canonical_point(-0.5, 7.0);
    EXPECT_NEAR(p.theta, 0.5, 1e-15);
    EXPECT_GE(p.phi, 0.0);
    EXPECT_LT(p.phi, 2 * std::numbers::pi);
    // Reflecting theta through the pole shifts phi by pi.
    EXPECT_NEAR(std::cos(p.phi), std::cos(7.0 + std::numbers::pi), 1e-12);
}

} // namespace
} // namespace eoft
