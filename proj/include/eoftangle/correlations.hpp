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

#include <array>

#include "eoftangle/sphere_search.hpp"
#include "eoftangle/tensor_core.hpp"

namespace eoft {

/// Rank-1 projective qubit measurement along a Bloch direction:
/// |n0> = (cos(theta/2), e^{i phi} sin(theta/2)), |n1> orthogonal to it.
struct MeasurementBasis {
    double bloch_theta = 0.0;
    double bloch_phi = 0.0;

    std::array<ComplexVector, 2> vectors() const;
    ComplexMatrix projector(int outcome) const;
};

/// Outcome probabilities below this contribute nothing to the averaged
/// post-measurement entropy.
inline constexpr double kOutcomeCutoff = 1e-12;
/// Negative discord within this slack is clamped to zero; beyond it the
/// computation raises ConsistencyError.
inline constexpr double kDiscordClamp = 1e-9;

struct ConditionalEntropyResult {
    double value = 0.0;  // S_q(A|B), bits
    MeasurementBasis basis;
};

/// Correlations of an ordered pair: `conditioned` is the party whose entropy
/// is reduced, `measured` the party measured locally (discord "<-" direction).
struct CorrelationReport {
    int conditioned = 0;
    int measured = 1;
    double entropy_conditioned = 0.0;
    double entropy_measured = 0.0;
    double mutual_info = 0.0;
    double classical = 0.0;     // J
    double discord = 0.0;       // delta
    double discrepancy = 0.0;   // Delta = J - delta
    double measured_cond_entropy = 0.0;
    MeasurementBasis optimal_basis;
};

/// S_A + S_B - S_AB of the reduction onto {party_a, party_b}.
double mutual_information(const DensityMatrix& rho, int party_a, int party_b);

/// Unmeasured S(A|B) = S_AB - S_B; negative for some entangled pairs.
double conditional_entropy(const DensityMatrix& rho, int party_a, int party_b);

/// sum_k p_k S(rho_{A|k}) for a two-party state and a fixed measurement on
/// party `measured` (which must be a qubit).
double post_measurement_entropy(const DensityMatrix& pair, int measured, const MeasurementBasis& basis);

/// Minimizes post_measurement_entropy over projective qubit bases.
/// Throws UnsupportedDimensionError when the measured party is not a qubit.
ConditionalEntropyResult measured_conditional_entropy(const DensityMatrix& pair, int measured,
                                                      const SphereSearchSettings& settings = {});

double classical_correlation(const DensityMatrix& pair, int measured);
double discord(const DensityMatrix& pair, int measured);
double discrepancy(const DensityMatrix& pair, int measured);

/// All correlations of (conditioned, measured) inside a multipartite state,
/// sharing one optimization run.
CorrelationReport pair_report(const DensityMatrix& rho, int conditioned, int measured,
                              const SphereSearchSettings& settings = {});

} // namespace eoft
