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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eoftangle/parallel.hpp"
#include "eoftangle/state_factory.hpp"
#include "eoftangle/tensor_core.hpp"

namespace eoft {

/// Zero-temperature Lorentzian bath on resonance, identical for both qubits.
struct DampingParams {
    double gamma0 = 1.0;   // sets the relaxation time ~ 1/gamma0
    double lambda = 0.01;  // spectral width, sets the bath memory ~ 1/lambda
    double a = 0.57735026918962573;  // initial a|00> + sqrt(1-a^2)|11>

    /// Throws ArgumentError unless gamma0 > 0, lambda > 0 and a in [0, 1].
    void validate() const;
};

/// Excited-state amplitude G(t) solving
///   G'(t) = -(gamma0 lambda / 2) int_0^t exp(-lambda (t - s)) G(s) ds,  G(0) = 1,
/// i.e. G = e^{-lambda t/2} [cosh(d t/2) + (lambda/d) sinh(d t/2)],
/// d = sqrt(lambda^2 - 2 gamma0 lambda), continued to cos/sin when d^2 < 0.
/// Real and signed.
double decay_amplitude(double t, const DampingParams& p);

/// Both qubits of bell_like(a) through amplitude damping with Kraus
/// operators diag(1, G) and sqrt(1 - G^2) |0><1|.
DensityMatrix evolve_pair(double t, const DampingParams& p);

/// Pure dilation with dims (2, 2, 4): one environment qubit per system qubit,
/// |1>|0>_e -> G |1>|0>_e + sqrt(1-G^2) |0>|1>_e, environments merged as
/// party C = (e_A, e_B).
PureState purified_tripartite(double t, const DampingParams& p);

struct DynamicsRecord {
    double time = 0.0;
    double amplitude = 1.0;  // G(t)
    double concurrence = 0.0;
    double eof_ab = 0.0;
    double discord_ab = 0.0;  // measurement on B
    double discord_ba = 0.0;
    double classical_ab = 0.0;
    double classical_ba = 0.0;
    double tau_a = 0.0;
    double tau_b = 0.0;
    double tau_c = 0.0;
    double tau_abc = 0.0;
};

struct DynamicsTrace {
    DampingParams params;
    std::vector<DynamicsRecord> records;
};

/// `steps` uniform points over [0, t_max], both ends included.
std::vector<double> uniform_time_grid(double t_max, int steps);

/// One grid time: dilation, (2, 2, 4) tangle report and Wootters E_AB.
DynamicsRecord dynamics_record(double t, const DampingParams& p);

/// Throws ArgumentError unless `times` is nonempty, nonnegative and ascending.
DynamicsTrace scan(const DampingParams& p, std::span<const double> times, Execution exec = Execution::parallel);

/// Sample-level classification of entanglement zeros along a trace.
struct ZeroClassification {
    struct Interval {
        std::size_t first = 0;
        std::size_t last = 0;  // inclusive
    };
    std::vector<Interval> dead_intervals;  // runs of >= min_run zero samples
    /// Isolated touch points: a zero sample outside any dead interval, or
    /// the sample nearest an amplitude sign change (rho_AB = |00><00| at G = 0)
    /// that no dead interval covers.
    std::vector<std::size_t> isolated_zeros;
};

inline constexpr double kZeroConcurrence = 1e-9;
inline constexpr int kDeadIntervalMinRun = 3;

/// A sample counts as zero when its concurrence is below `zero_tolerance`.
ZeroClassification classify_zeros(const DynamicsTrace& trace, double zero_tolerance = kZeroConcurrence,
                                  int min_run = kDeadIntervalMinRun);

} // namespace eoft
