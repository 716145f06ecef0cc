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

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace eoft {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Subsystem dimensions, leftmost tensor factor first.
using Dims = std::vector<int>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;
/// Eigenvalues below this magnitude contribute nothing to an entropy.
inline constexpr double kEntropyCutoff = 1e-12;

/// Product of the entries; throws ArgumentError on an empty list or a
/// non-positive dimension.
int total_dimension(std::span<const int> dims);

/// A validated density matrix together with its tensor-factor structure.
///
/// Construction checks Hermiticity (1e-12), unit trace (1e-10) and
/// positivity (eigenvalues >= -1e-10), then stores the exactly Hermitian
/// part of the input.
class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix matrix, Dims dims);

    /// |psi><psi| for a normalized vector.
    static DensityMatrix projector(const ComplexVector& psi, Dims dims);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const Dims& dims() const noexcept { return dims_; }
    Eigen::Index order() const noexcept { return matrix_.rows(); }
    int num_parties() const noexcept { return static_cast<int>(dims_.size()); }
    int dim(int party) const;

  private:
    ComplexMatrix matrix_;
    Dims dims_;
};

/// Eigenpairs of a Hermitian matrix, eigenvalues in descending order and
/// eigenvectors as the matching columns.
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out every subsystem not listed in `keep`. Kept factors retain
/// their original relative order regardless of the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

/// Permutes tensor factors: factor i of the result is factor order[i] of rho.
DensityMatrix permute_subsystems(const DensityMatrix& rho, std::span<const int> order);

/// Full Hermitian eigendecomposition. Throws ArgumentError when the input is
/// not square or deviates from Hermitian by more than 1e-12 (relative to its
/// largest entry when that exceeds one).
Spectrum eig_hermitian(const ComplexMatrix& m);

/// Shannon entropy in bits of a spectrum, with |lambda| < 1e-12 treated as
/// zero and slightly negative values clamped.
double spectrum_entropy(const RealVector& eigenvalues);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// h(p) = -p log2 p - (1-p) log2(1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

} // namespace eoft
