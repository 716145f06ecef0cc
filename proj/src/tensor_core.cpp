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

#include "eoftangle/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eoftangle/errors.hpp"

namespace eoft {

namespace {

// Mixed-radix digits of a flat index, most significant (party 0) first.
std::vector<int> digits_of(int index, std::span<const int> dims) {
    std::vector<int> digits(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
    return digits;
}

int index_of(std::span<const int> digits, std::span<const int> dims) {
    int index = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        index = index * dims[k] + digits[k];
    }
    return index;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace

int total_dimension(std::span<const int> dims) {
    if (dims.empty()) {
        throw ArgumentError("dimension list is empty");
    }
    int total = 1;
    for (int d : dims) {
        if (d < 1) {
            throw ArgumentError("subsystem dimension must be positive, got " + std::to_string(d));
        }
        total *= d;
    }
    return total;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Dims dims) : dims_(std::move(dims)) {
    if (matrix.rows() != matrix.cols()) {
        throw ArgumentError("density matrix must be square");
    }
    if (total_dimension(dims_) != matrix.rows()) {
        throw ArgumentError("subsystem dimensions do not multiply to the matrix order");
    }
    const ComplexMatrix adjoint = matrix.adjoint();
    if (max_abs(matrix - adjoint) > kHermitianTolerance) {
        throw ArgumentError("density matrix is not Hermitian");
    }
    matrix_ = 0.5 * (matrix + adjoint);
    const double trace = matrix_.trace().real();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        throw ArgumentError("density matrix trace is " + std::to_string(trace) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPsdTolerance) {
        throw ArgumentError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::projector(const ComplexVector& psi, Dims dims) {
    return DensityMatrix(psi * psi.adjoint(), std::move(dims));
}

int DensityMatrix::dim(int party) const {
    if (party < 0 || party >= num_parties()) {
        throw ArgumentError("party index " + std::to_string(party) + " out of range");
    }
    return dims_[static_cast<std::size_t>(party)];
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const Dims& dims = rho.dims();
    const int n = rho.num_parties();
    if (keep.empty()) {
        throw ArgumentError("partial trace must keep at least one subsystem");
    }
    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    for (int k : keep) {
        if (k < 0 || k >= n) {
            throw ArgumentError("partial trace index " + std::to_string(k) + " out of range");
        }
        if (kept[static_cast<std::size_t>(k)]) {
            throw ArgumentError("partial trace index " + std::to_string(k) + " repeated");
        }
        kept[static_cast<std::size_t>(k)] = true;
    }

    Dims kept_dims;
    Dims traced_dims;
    for (int k = 0; k < n; ++k) {
        (kept[static_cast<std::size_t>(k)] ? kept_dims : traced_dims).push_back(dims[static_cast<std::size_t>(k)]);
    }
    if (traced_dims.empty()) {
        return rho;
    }
    const int kept_total = total_dimension(kept_dims);
    const int traced_total = total_dimension(traced_dims);

    // full_index[r * traced_total + t] is the flat index of (kept r, traced t).
    std::vector<int> full_index(static_cast<std::size_t>(kept_total * traced_total));
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int r = 0; r < kept_total; ++r) {
        const auto kd = digits_of(r, kept_dims);
        for (int t = 0; t < traced_total; ++t) {
            const auto td = digits_of(t, traced_dims);
            std::size_t ki = 0;
            std::size_t ti = 0;
            for (int k = 0; k < n; ++k) {
                digits[static_cast<std::size_t>(k)] = kept[static_cast<std::size_t>(k)] ? kd[ki++] : td[ti++];
            }
            full_index[static_cast<std::size_t>(r * traced_total + t)] = index_of(digits, dims);
        }
    }

    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out = ComplexMatrix::Zero(kept_total, kept_total);
    for (int r = 0; r < kept_total; ++r) {
        for (int c = 0; c < kept_total; ++c) {
            Complex sum = 0.0;
            for (int t = 0; t < traced_total; ++t) {
                sum += m(full_index[static_cast<std::size_t>(r * traced_total + t)],
                         full_index[static_cast<std::size_t>(c * traced_total + t)]);
            }
            out(r, c) = sum;
        }
    }
    return DensityMatrix(std::move(out), std::move(kept_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
    return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix permute_subsystems(const DensityMatrix& rho, std::span<const int> order) {
    const int n = rho.num_parties();
    if (static_cast<int>(order.size()) != n) {
        throw ArgumentError("permutation length does not match the number of subsystems");
    }
    std::vector<int> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < n; ++k) {
        if (sorted[static_cast<std::size_t>(k)] != k) {
            throw ArgumentError("invalid subsystem permutation");
        }
    }
    const Dims& dims = rho.dims();
    Dims new_dims(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        new_dims[static_cast<std::size_t>(j)] = dims[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
    }
    const auto total = static_cast<int>(rho.order());
    std::vector<int> mapped(static_cast<std::size_t>(total));
    std::vector<int> new_digits(static_cast<std::size_t>(n));
    for (int i = 0; i < total; ++i) {
        const auto old_digits = digits_of(i, dims);
        for (int j = 0; j < n; ++j) {
            new_digits[static_cast<std::size_t>(j)] =
                old_digits[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
        }
        mapped[static_cast<std::size_t>(i)] = index_of(new_digits, new_dims);
    }
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out(total, total);
    for (int i = 0; i < total; ++i) {
        for (int j = 0; j < total; ++j) {
            out(mapped[static_cast<std::size_t>(i)], mapped[static_cast<std::size_t>(j)]) = m(i, j);
        }
    }
    return DensityMatrix(std::move(out), std::move(new_dims));
}

Spectrum eig_hermitian(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ArgumentError("eigendecomposition requires a square matrix");
    }
    const double scale = std::max(1.0, max_abs(m));
    if (max_abs(m - m.adjoint()) > kHermitianTolerance * scale) {
        throw ArgumentError("eigendecomposition requires a Hermitian matrix");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw ConsistencyError("Hermitian eigensolver did not converge");
    }
    // Eigen returns ascending order.
    Spectrum out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

double spectrum_entropy(const RealVector& eigenvalues) {
    double s = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda >= kEntropyCutoff) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    return spectrum_entropy(solver.eigenvalues());
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

} // namespace eoft
