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

#pragma once

#include <functional>

namespace eoft {

/// Point on the Bloch sphere, theta in [0, pi], phi in [0, 2 pi).
struct SpherePoint {
    double theta = 0.0;
    double phi = 0.0;
};

struct SphereSearchSettings {
    int grid_theta = 31;
    int grid_phi = 62;
    int starts = 3;                    // best grid cells refined
    int max_refine_evaluations = 500;  // per start
    double tolerance = 1e-8;           // simplex objective spread
};

struct SphereMinimum {
    SpherePoint point;
    double value = 0.0;
    int evaluations = 0;
};

/// Maps any (theta, phi) onto the canonical chart. The unit vector
/// (cos(theta/2), e^{i phi} sin(theta/2)) is unchanged up to a global phase.
SpherePoint canonical_point(double theta, double phi);

/// Coarse theta x phi grid followed by Nelder-Mead descent from the best
/// `starts` grid points. The objective must be a smooth function of the
/// Bloch direction, so it may be evaluated outside the canonical chart.
SphereMinimum minimize_on_sphere(const std::function<double(double, double)>& objective,
                                 const SphereSearchSettings& settings = {});

} // namespace eoft
