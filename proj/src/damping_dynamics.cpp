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

#include "eoftangle/damping_dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "eoftangle/entanglement.hpp"
#include "eoftangle/errors.hpp"
#include "eoftangle/monogamy.hpp"

namespace eoft {

void DampingParams::validate() const {
    if (!(gamma0 > 0.0) || !(lambda > 0.0)) {
        throw ArgumentError("damping rates gamma0 and lambda must be positive");
    }
    if (!(a >= 0.0 && a <= 1.0)) {
        throw ArgumentError("initial amplitude a must lie in [0, 1]");
    }
}

double decay_amplitude(double t, const DampingParams& p) {
    p.validate();
    if (!(t >= 0.0)) {
        throw ArgumentError("time must be nonnegative");
    }
    const double lambda = p.lambda;
    const double d2 = lambda * lambda - 2.0 * p.gamma0 * lambda;
    if (std::abs(d2) <= 1e-14 * lambda * lambda) {
        return std::exp(-0.5 * lambda * t) * (1.0 + 0.5 * lambda * t);
    }
    if (d2 > 0.0) {
        // Exponential form of the cosh/sinh bracket; stays finite for large d t.
        const double d = std::sqrt(d2);
        return 0.5 * ((1.0 + lambda / d) * std::exp(0.5 * (d - lambda) * t) +
                      (1.0 - lambda / d) * std::exp(-0.5 * (d + lambda) * t));
    }
    const double omega = std::sqrt(-d2);
    return std::exp(-0.5 * lambda * t) * (std::cos(0.5 * omega * t) + (lambda / omega) * std::sin(0.5 * omega * t));
}

DensityMatrix evolve_pair(double t, const DampingParams& p) {
    const double g = decay_amplitude(t, p);
    const double s = std::sqrt(std::max(0.0, 1.0 - g * g));
    ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = g;
    ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
    k1(0, 1) = s;
    const std::array<ComplexMatrix, 2> kraus{k0, k1};

    const ComplexMatrix initial = bell_like(p.a).density().matrix();
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (const auto& ka : kraus) {
        for (const auto& kb : kraus) {
            const ComplexMatrix k = kron(ka, kb);
            out += k * initial * k.adjoint();
        }
    }
    return DensityMatrix(std::move(out), {2, 2});
}

PureState purified_tripartite(double t, const DampingParams& p) {
    const double g = decay_amplitude(t, p);
    const double s = std::sqrt(std::max(0.0, 1.0 - g * g));
    const double a = p.a;
    const double b = std::sqrt(1.0 - a * a);
    // Flat index A*8 + B*4 + eA*2 + eB.
    ComplexVector amps = ComplexVector::Zero(16);
    amps(0b0000) = a;
    amps(0b1100) = b * g * g;
    amps(0b1001) = b * g * s;
    amps(0b0110) = b * s * g;
    amps(0b0011) = b * s * s;
    amps /= amps.norm();
    return PureState(std::move(amps), {2, 2, 4});
}

std::vector<double> uniform_time_grid(double t_max, int steps) {
    if (steps < 2 || !(t_max > 0.0)) {
        throw ArgumentError("time grid needs t_max > 0 and at least two steps");
    }
    std::vector<double> times(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        times[static_cast<std::size_t>(i)] = t_max * i / (steps - 1);
    }
    return times;
}

DynamicsRecord dynamics_record(double t, const DampingParams& p) {
    const PureState psi = purified_tripartite(t, p);
    const TangleReport report = tau_total_22N(psi);
    DynamicsRecord r;
    r.time = t;
    r.amplitude = decay_amplitude(t, p);
    r.concurrence = concurrence(psi.reduced({0, 1}));
    r.eof_ab = eof_from_concurrence(r.concurrence);
    r.discord_ab = report.discord[0][1];
    r.discord_ba = report.discord[1][0];
    r.classical_ab = report.classical[0][1];
    r.classical_ba = report.classical[1][0];
    r.tau_a = report.tau[0];
    r.tau_b = report.tau[1];
    r.tau_c = report.tau[2];
    r.tau_abc = report.tau_total;
    return r;
}

DynamicsTrace scan(const DampingParams& p, std::span<const double> times, Execution exec) {
    p.validate();
    if (times.empty()) {
        throw ArgumentError("time grid is empty");
    }
    if (times.front() < 0.0 || !std::is_sorted(times.begin(), times.end())) {
        throw ArgumentError("time grid must be nonnegative and ascending");
    }
    DynamicsTrace trace;
    trace.params = p;
    trace.records = parallel_map(
        times.size(), [&](std::size_t i) { return dynamics_record(times[i], p); }, exec);
    return trace;
}

ZeroClassification classify_zeros(const DynamicsTrace& trace, double zero_tolerance, int min_run) {
    const auto& rec = trace.records;
    const std::size_t n = rec.size();
    ZeroClassification out;
    std::vector<bool> covered(n, false);

    for (std::size_t i = 0; i < n;) {
        if (rec[i].concurrence >= zero_tolerance) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && rec[j + 1].concurrence < zero_tolerance) {
            ++j;
        }
        if (j - i + 1 >= static_cast<std::size_t>(min_run)) {
            out.dead_intervals.push_back({i, j});
            for (std::size_t k = (i > 0 ? i - 1 : 0); k <= std::min(j + 1, n - 1); ++k) {
                covered[k] = true;
            }
        } else {
            for (std::size_t k = i; k <= j; ++k) {
                out.isolated_zeros.push_back(k);
            }
        }
        i = j + 1;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (rec[i].amplitude * rec[i + 1].amplitude < 0.0) {
            const std::size_t k = std::abs(rec[i].amplitude) <= std::abs(rec[i + 1].amplitude) ? i : i + 1;
            if (!covered[k]) {
                out.isolated_zeros.push_back(k);
            }
        }
    }
    std::sort(out.isolated_zeros.begin(), out.isolated_zeros.end());
    out.isolated_zeros.erase(std::unique(out.isolated_zeros.begin(), out.isolated_zeros.end()),
                             out.isolated_zeros.end());
    return out;
}

} // namespace eoft
