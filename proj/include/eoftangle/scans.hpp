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

#include <vector>

#include "eoftangle/parallel.hpp"

namespace eoft {

/// n points strictly inside (lo, hi): lo + (i + 1)(hi - lo)/(n + 1).
std::vector<double> open_interior_grid(int n, double lo, double hi);

struct WScanRow {
    double theta = 0.0;
    double phi = 0.0;
    double tau_abc = 0.0;
    double tau_a = 0.0;
    double tau_b = 0.0;
    double tau_c = 0.0;
};

/// Tangles of w({theta, phi}) over the open square (0, pi/2)^2, theta-major.
std::vector<WScanRow> scan_w(int n_theta, int n_phi, Execution exec = Execution::parallel);

/// Single W-family point; the kernel scan_w maps over.
WScanRow w_point(double theta, double phi);

struct GhzScanRow {
    double theta = 0.0;  // cos(theta)|000> + e^{i phi} sin(theta)|111>
    double phi = 0.0;
    double tau_abc = 0.0;
    double tau_a = 0.0;
    double tau_b = 0.0;
    double tau_c = 0.0;
    double max_discord = 0.0;  // over the six ordered pairs
};

/// theta over the open interval (0, pi/2), phi over [0, 2 pi) in n_phi steps.
std::vector<GhzScanRow> scan_ghz(int n_theta, int n_phi, Execution exec = Execution::parallel);

GhzScanRow ghz_point(double theta, double phi);

} // namespace eoft
