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
#include <random>

#include "eoftangle/errors.hpp"
#include "eoftangle/state_factory.hpp"
#include "eoftangle/tensor_core.hpp"
#include "oracles.hpp"

namespace eoft {
namespace {

ComplexMatrix random_matrix(int rows, int cols, std::mt19937_64& engine) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m(i, j) = Complex(normal(engine), normal(engine));
        }
    }
    return m;
}

TEST(Kron, IdentityTimesPauliX) {
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    const ComplexMatrix k = kron(ComplexMatrix::Identity(2, 2), x);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected.topLeftCorner(2, 2) = x;
    expected.bottomRightCorner(2, 2) = x;
    EXPECT_LT((k - expected).norm(), 1e-15);
}

TEST(Kron, MatchesIndexLoopsAndTraceFactorizes) {
    std::mt19937_64 engine(7);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_matrix(2, 2, engine);
        const ComplexMatrix b = random_matrix(3, 2, engine);
        EXPECT_LT((kron(a, b) - oracle::kron_loops(a, b)).norm(), 1e-13);
        const ComplexMatrix c = random_matrix(2, 2, engine);
        EXPECT_NEAR(std::abs(kron(a, c).trace() - a.trace() * c.trace()), 0.0, 1e-12);
    }
}

TEST(PartialTrace, ProductStateFactorizes) {
    std::mt19937_64 engine(11);
    const ComplexMatrix ua = oracle::random_unitary(2, engine);
    const ComplexMatrix ub = oracle::random_unitary(3, engine);
    ComplexMatrix ra = ComplexMatrix::Zero(2, 2);
    ra(0, 0) = 0.3;
    ra(1, 1) = 0.7;
    ra = ua * ra * ua.adjoint();
    ComplexMatrix rb = ComplexMatrix::Zero(3, 3);
    rb(0, 0) = 0.5;
    rb(1, 1) = 0.2;
    rb(2, 2) = 0.3;
    rb = ub * rb * ub.adjoint();
    const DensityMatrix rho(oracle::kron_loops(ra, rb), {2, 3});
    EXPECT_LT((partial_trace(rho, {0}).matrix() - ra).norm(), 1e-12);
    EXPECT_LT((partial_trace(rho, {1}).matrix() - rb).norm(), 1e-12);
}

TEST(PartialTrace, BellStateGivesMaximallyMixed) {
    const DensityMatrix rho = bell_like(1.0 / std::sqrt(2.0)).density();
    EXPECT_LT((partial_trace(rho, {0}).matrix() - 0.5 * ComplexMatrix::Identity(2, 2)).norm(), 1e-14);
    EXPECT_LT((partial_trace(rho, {1}).matrix() - 0.5 * ComplexMatrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(PartialTrace, HaarStateMatchesFullSummation) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const PureState psi = haar_random({2, 2, 2}, seed);
        const DensityMatrix ab = partial_trace(psi.density(), {0, 1});
        EXPECT_NEAR(ab.matrix().trace().real(), 1.0, 1e-12);
        // rho_AB[(a,b),(a',b')] = sum_c psi[a,b,c] conj(psi[a',b',c]).
        const ComplexVector& v = psi.amplitudes();
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const Complex expected = v(2 * i) * std::conj(v(2 * j)) + v(2 * i + 1) * std::conj(v(2 * j + 1));
                EXPECT_LT(std::abs(ab.matrix()(i, j) - expected), 1e-14);
            }
        }
    }
}

TEST(PartialTrace, KeepOrderIsNormalized) {
    const PureState psi = haar_random({2, 3, 2}, 3);
    const DensityMatrix a = partial_trace(psi.density(), {0, 2});
    const DensityMatrix b = partial_trace(psi.density(), {2, 0});
    EXPECT_EQ(a.dims(), (Dims{2, 2}));
    EXPECT_LT((a.matrix() - b.matrix()).norm(), 1e-15);
}

TEST(PartialTrace, RejectsBadParties) {
    const DensityMatrix rho = haar_random({2, 2}, 1).density();
    EXPECT_THROW(partial_trace(rho, {2}), ArgumentError);
    EXPECT_THROW(partial_trace(rho, {0, 0}), ArgumentError);
}

TEST(DensityMatrix, ValidatesInput) {
    EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(4, 4) / 4.0, {2, 3}), ArgumentError);
    EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(2, 2), {2}), ArgumentError);
    ComplexMatrix nonhermitian = ComplexMatrix::Identity(2, 2) / 2.0;
    nonhermitian(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix(nonhermitian, {2}), ArgumentError);
    ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix(negative, {2}), ArgumentError);
}

TEST(PermuteSubsystems, SwapsFactors) {
    const PureState psi = haar_random({2, 3}, 5);
    const DensityMatrix rho = psi.density();
    const std::vector<int> order{1, 0};
    const DensityMatrix swapped = permute_subsystems(rho, order);
    EXPECT_EQ(swapped.dims(), (Dims{3, 2}));
    EXPECT_LT((partial_trace(swapped, {0}).matrix() - partial_trace(rho, {1}).matrix()).norm(), 1e-14);
}

TEST(EigHermitian, IdentityAndPauliX) {
    const Spectrum id = eig_hermitian(ComplexMatrix::Identity(3, 3));
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(id.eigenvalues(i), 1.0, 1e-15);
    }
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    const Spectrum sx = eig_hermitian(x);
    EXPECT_NEAR(sx.eigenvalues(0), 1.0, 1e-15);
    EXPECT_NEAR(sx.eigenvalues(1), -1.0, 1e-15);
}

TEST(EigHermitian, ReconstructsRandomHermitian) {
    std::mt19937_64 engine(13);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix h = oracle::random_hermitian(8, engine);
        const Spectrum s = eig_hermitian(h);
        for (int i = 1; i < 8; ++i) {
            EXPECT_GE(s.eigenvalues(i - 1), s.eigenvalues(i));
        }
        const ComplexMatrix rebuilt =
            s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
        EXPECT_LT((rebuilt - h).norm(), 1e-10);
        EXPECT_NEAR(s.eigenvalues.sum(), h.trace().real(), 1e-10);
    }
}

TEST(EigHermitian, RejectsNonHermitian) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(eig_hermitian(m), ArgumentError);
}

TEST(Entropy, BinaryAndDiagonal) {
    const double h13 = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
    EXPECT_NEAR(binary_entropy(1.0 / 3), h13, 1e-15);
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1.0 / 3;
    d(1, 1) = 2.0 / 3;
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(d, {2})), h13, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(ComplexMatrix::Identity(4, 4) / 4.0, {2, 2})), 2.0, 1e-14);
}

TEST(Entropy, UnitaryInvarianceAndPurityBalance) {
    std::mt19937_64 engine(17);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PureState psi = haar_random({2, 3}, seed);
        const DensityMatrix a = psi.reduced({0});
        const DensityMatrix b = psi.reduced({1});
        const double sa = von_neumann_entropy(a);
        EXPECT_NEAR(sa, von_neumann_entropy(b), 1e-10);
        EXPECT_NEAR(sa, oracle::entropy_bits(a.matrix()), 1e-10);
        EXPECT_NEAR(von_neumann_entropy(psi.density()), 0.0, 1e-10);
        const ComplexMatrix u = oracle::random_unitary(2, engine);
        EXPECT_NEAR(von_neumann_entropy(DensityMatrix(u * a.matrix() * u.adjoint(), {2})), sa, 1e-10);
    }
}

} // namespace
} // namespace eoft
