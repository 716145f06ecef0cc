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

#include "eoftangle/correlations.hpp"

#include <cmath>
#include <string>

#include "eoftangle/errors.hpp"

namespace eoft {

namespace {

void check_pair_indices(const DensityMatrix& rho, int party_a, int party_b) {
    const int n = rho.num_parties();
    if (n < 2) {
        throw ArgumentError("correlation measures need at least two subsystems");
    }
    if (party_a < 0 || party_a >= n || party_b < 0 || party_b >= n) {
        throw ArgumentError("party index out of range");
    }
    if (party_a == party_b) {
        throw ArgumentError("correlation measures need two distinct parties");
    }
}

void check_two_party(const DensityMatrix& pair, int measured) {
    if (pair.num_parties() != 2) {
        throw ArgumentError("expected a two-party state");
    }
    if (measured != 0 && measured != 1) {
        throw ArgumentError("measured party must be 0 or 1 in a two-party state");
    }
    if (pair.dim(measured) != 2) {
        throw UnsupportedDimensionError("measured party has dimension " + std::to_string(pair.dim(measured)) +
                                        "; only qubit measurements are optimized, use the Koashi-Winter route");
    }
}

// The four d x d blocks <b|rho|b'> over the measured qubit.
struct MeasuredBlocks {
    int dim = 0;
    std::array<std::array<ComplexMatrix, 2>, 2> block;

    MeasuredBlocks(const DensityMatrix& pair, int measured) : dim(pair.dim(1 - measured)) {
        const ComplexMatrix& m = pair.matrix();
        for (int b = 0; b < 2; ++b) {
            for (int bp = 0; bp < 2; ++bp) {
                ComplexMatrix& out = block[b][bp];
                out.resize(dim, dim);
                for (int a = 0; a < dim; ++a) {
                    for (int ap = 0; ap < dim; ++ap) {
                        out(a, ap) = measured == 1 ? m(2 * a + b, 2 * ap + bp) : m(b * dim + a, bp * dim + ap);
                    }
                }
            }
        }
    }

    // p_k S(rho_{A|k}) for the unnormalized conditional state of outcome vector n.
    double weighted_entropy(const ComplexVector& n) const {
        ComplexMatrix sigma = std::conj(n(0)) * n(0) * block[0][0] + std::conj(n(0)) * n(1) * block[0][1] +
                              std::conj(n(1)) * n(0) * block[1][0] + std::conj(n(1)) * n(1) * block[1][1];
        const double p = sigma.trace().real();
        if (p < kOutcomeCutoff) {
            return 0.0;
        }
        RealVector lambda;
        if (dim == 2) {
            const double x = sigma(0, 0).real();
            const double y = sigma(1, 1).real();
            const double mean = 0.5 * (x + y);
            const double radius = std::sqrt(0.25 * (x - y) * (x - y) + std::norm(sigma(0, 1)));
            lambda.resize(2);
            lambda << (mean + radius) / p, (mean - radius) / p;
        } else {
            sigma = 0.5 * (sigma + sigma.adjoint()).eval();
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sigma, Eigen::EigenvaluesOnly);
            lambda = solver.eigenvalues() / p;
        }
        return p * spectrum_entropy(lambda);
    }

    double objective(const MeasurementBasis& basis) const {
        const auto vecs = basis.vectors();
        return weighted_entropy(vecs[0]) + weighted_entropy(vecs[1]);
    }
};

} // namespace

std::array<ComplexVector, 2> MeasurementBasis::vectors() const {
    const double c = std::cos(0.5 * bloch_theta);
    const double s = std::sin(0.5 * bloch_theta);
    const Complex phase = std::polar(1.0, bloch_phi);
    ComplexVector n0(2);
    ComplexVector n1(2);
    n0 << c, phase * s;
    n1 << s, -phase * c;
    return {n0, n1};
}

ComplexMatrix MeasurementBasis::projector(int outcome) const {
    if (outcome != 0 && outcome != 1) {
        throw ArgumentError("qubit measurement outcome must be 0 or 1");
    }
    const auto vecs = vectors();
    const ComplexVector& v = vecs[static_cast<std::size_t>(outcome)];
    return v * v.adjoint();
}

double mutual_information(const DensityMatrix& rho, int party_a, int party_b) {
    check_pair_indices(rho, party_a, party_b);
    const DensityMatrix pair = partial_trace(rho, {party_a, party_b});
    return von_neumann_entropy(partial_trace(pair, {0})) + von_neumann_entropy(partial_trace(pair, {1})) -
           von_neumann_entropy(pair);
}

double conditional_entropy(const DensityMatrix& rho, int party_a, int party_b) {
    check_pair_indices(rho, party_a, party_b);
    const DensityMatrix pair = partial_trace(rho, {party_a, party_b});
    return von_neumann_entropy(pair) - von_neumann_entropy(partial_trace(rho, {party_b}));
}

double post_measurement_entropy(const DensityMatrix& pair, int measured, const MeasurementBasis& basis) {
    check_two_party(pair, measured);
    return MeasuredBlocks(pair, measured).objective(basis);
}

ConditionalEntropyResult measured_conditional_entropy(const DensityMatrix& pair, int measured,
                                                      const SphereSearchSettings& settings) {
    check_two_party(pair, measured);
    const MeasuredBlocks blocks(pair, measured);
    const SphereMinimum best = minimize_on_sphere(
        [&blocks](double theta, double phi) { return blocks.objective({theta, phi}); }, settings);
    return {std::max(0.0, best.value), {best.point.theta, best.point.phi}};
}

CorrelationReport pair_report(const DensityMatrix& rho, int conditioned, int measured,
                              const SphereSearchSettings& settings) {
    check_pair_indices(rho, conditioned, measured);
    const DensityMatrix pair = partial_trace(rho, {conditioned, measured});
    const int measured_slot = conditioned < measured ? 1 : 0;

    CorrelationReport r;
    r.conditioned = conditioned;
    r.measured = measured;
    r.entropy_conditioned = von_neumann_entropy(partial_trace(pair, {1 - measured_slot}));
    r.entropy_measured = von_neumann_entropy(partial_trace(pair, {measured_slot}));
    const double joint = von_neumann_entropy(pair);
    r.mutual_info = r.entropy_conditioned + r.entropy_measured - joint;

    const ConditionalEntropyResult sq = measured_conditional_entropy(pair, measured_slot, settings);
    r.measured_cond_entropy = sq.value;
    r.optimal_basis = sq.basis;
    r.classical = std::max(0.0, r.entropy_conditioned - sq.value);
    r.discord = r.mutual_info - r.classical;
    if (r.discord < 0.0) {
        if (r.discord < -kDiscordClamp) {
            throw ConsistencyError("negative discord " + std::to_string(r.discord) + " beyond roundoff");
        }
        r.discord = 0.0;
        r.classical = r.mutual_info;
    }
    r.discrepancy = r.classical - r.discord;
    return r;
}

double classical_correlation(const DensityMatrix& pair, int measured) {
    check_two_party(pair, measured);
    return pair_report(pair, 1 - measured, measured).classical;
}

double discord(const DensityMatrix& pair, int measured) {
    check_two_party(pair, measured);
    return pair_report(pair, 1 - measured, measured).discord;
}

double discrepancy(const DensityMatrix& pair, int measured) {
    check_two_party(pair, measured);
    return pair_report(pair, 1 - measured, measured).discrepancy;
}

} // namespace eoft
