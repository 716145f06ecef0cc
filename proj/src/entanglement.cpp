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

#include "eoftangle/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "eoftangle/correlations.hpp"
#include "eoftangle/errors.hpp"

namespace eoft {

namespace {

constexpr double kSpinFlipClamp = 1e-12;

void require_two_qubits(const DensityMatrix& pair) {
    if (pair.dims() != Dims{2, 2}) {
        throw ArgumentError("two-qubit entanglement measures need dims (2, 2)");
    }
}

ComplexMatrix sigma_y_sigma_y() {
    ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    return yy;
}

} // namespace

std::string_view to_string(EofMethod method) {
    switch (method) {
    case EofMethod::pure_partition:
        return "pure_partition";
    case EofMethod::wootters:
        return "wootters";
    case EofMethod::koashi_winter:
        return "koashi_winter";
    }
    return "unknown";
}

double concurrence(const DensityMatrix& pair) {
    require_two_qubits(pair);
    const ComplexMatrix& rho = pair.matrix();
    const ComplexMatrix yy = sigma_y_sigma_y();
    const ComplexMatrix flipped = yy * rho.conjugate() * yy;

    // sqrt(rho) flipped sqrt(rho) is Hermitian and shares its spectrum with
    // rho * flipped.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> rho_eig(rho);
    const RealVector root_vals = rho_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const ComplexMatrix root = rho_eig.eigenvectors() * root_vals.asDiagonal() * rho_eig.eigenvectors().adjoint();
    ComplexMatrix product = root * flipped * root;
    product = 0.5 * (product + product.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> product_eig(product, Eigen::EigenvaluesOnly);

    std::vector<double> lambda(4);
    for (int i = 0; i < 4; ++i) {
        const double v = product_eig.eigenvalues()(i);
        lambda[static_cast<std::size_t>(i)] = v < kSpinFlipClamp ? 0.0 : std::sqrt(v);
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double eof_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

EntanglementValue eof_two_qubit(const DensityMatrix& pair) {
    return {eof_from_concurrence(concurrence(pair)), EofMethod::wootters};
}

EntanglementValue eof_pure_partition(const PureState& psi, std::span<const int> party_set) {
    if (party_set.empty() || static_cast<int>(party_set.size()) >= psi.num_parties()) {
        throw ArgumentError("party set must be a nonempty proper subset");
    }
    return {von_neumann_entropy(psi.reduced(party_set)), EofMethod::pure_partition};
}

EntanglementValue eof_pure_partition(const PureState& psi, std::initializer_list<int> party_set) {
    return eof_pure_partition(psi, std::span<const int>(party_set.begin(), party_set.size()));
}

EntanglementValue eof_koashi_winter(const PureState& psi, int pivot, int partner) {
    if (psi.num_parties() != 3) {
        throw ArgumentError("Koashi-Winter EOF needs a tripartite pure state");
    }
    if (pivot < 0 || pivot > 2 || partner < 0 || partner > 2 || pivot == partner) {
        throw ArgumentError("pivot and partner must be distinct parties of a tripartite state");
    }
    const int measured = 3 - pivot - partner;
    if (psi.dims()[static_cast<std::size_t>(measured)] != 2) {
        throw UnsupportedDimensionError("Koashi-Winter route measures the remaining party, which is not a qubit");
    }
    const DensityMatrix rho = psi.density();
    const double disc = pair_report(rho, pivot, measured).discord;
    const double cond = conditional_entropy(rho, pivot, partner);
    double value = disc - cond;
    if (value < 0.0 && value > -kDiscordClamp) {
        value = 0.0;
    }
    return {value, EofMethod::koashi_winter};
}

double concurrence_tangle(const PureState& psi) {
    if (psi.dims() != Dims{2, 2, 2}) {
        throw ArgumentError("concurrence tangle needs three qubits");
    }
    const DensityMatrix rho = psi.density();
    const double det_a = partial_trace(rho, {0}).matrix().determinant().real();
    const double c_ab = concurrence(partial_trace(rho, {0, 1}));
    const double c_ac = concurrence(partial_trace(rho, {0, 2}));
    return 4.0 * det_a - c_ab * c_ab - c_ac * c_ac;
}

} // namespace eoft
