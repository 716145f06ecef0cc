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
#include <filesystem>
#include <numbers>

#include "eoftangle/errors.hpp"
#include "eoftangle/state_factory.hpp"
#include "eoftangle/tensor_core.hpp"

namespace eoft {
namespace {

TEST(Ghz, ReducedStateIsDiagonal) {
    const double a = 0.6;
    const PureState psi = ghz(a, std::sqrt(1 - a * a));
    const ComplexMatrix ra = psi.reduced({0}).matrix();
    EXPECT_NEAR(ra(0, 0).real(), a * a, 1e-14);
    EXPECT_NEAR(ra(1, 1).real(), 1 - a * a, 1e-14);
    EXPECT_NEAR(std::abs(ra(0, 1)), 0.0, 1e-14);
    EXPECT_THROW(ghz(0.5, 0.5), ArgumentError);
}

TEST(W, BalancedReductions) {
    const WParams p = WParams::balanced();
    EXPECT_NEAR(p.alpha(), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(p.beta(), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(p.gamma(), 1 / std::sqrt(3.0), 1e-15);
    const PureState psi = w(p);
    for (int party = 0; party < 3; ++party) {
        const ComplexMatrix r = psi.reduced({party}).matrix();
        EXPECT_NEAR(r(0, 0).real(), 2.0 / 3, 1e-14);
        EXPECT_NEAR(r(1, 1).real(), 1.0 / 3, 1e-14);
    }
}

TEST(W, AmplitudePlacement) {
    const WParams p{0.4, 1.1};
    const ComplexVector& v = w(p).amplitudes();
    EXPECT_NEAR(v(1).real(), p.alpha(), 1e-15);
    EXPECT_NEAR(v(2).real(), p.beta(), 1e-15);
    EXPECT_NEAR(v(4).real(), p.gamma(), 1e-15);
}

TEST(BellLike, ReducedEntropy) {
    const PureState psi = bell_like(1 / std::sqrt(3.0));
    EXPECT_NEAR(von_neumann_entropy(psi.reduced({0})), binary_entropy(1.0 / 3), 1e-13);
    EXPECT_THROW(bell_like(1.5), ArgumentError);
}

TEST(HaarRandom, SeedDeterminism) {
    const PureState a = haar_random({2, 2, 2}, 42);
    const PureState b = haar_random({2, 2, 2}, 42);
    const PureState c = haar_random({2, 2, 2}, 43);
    EXPECT_EQ(a.amplitudes(), b.amplitudes());
    EXPECT_GT((a.amplitudes() - c.amplitudes()).norm(), 1e-3);
    EXPECT_NEAR(a.amplitudes().norm(), 1.0, 1e-14);
}

TEST(HaarRandom, MeanPurityMatchesHaarMoment) {
    // For a Haar state on C^m (x) C^n, E[Tr rho_A^2] = (m + n) / (m n + 1).
    const int samples = 10000;
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        const DensityMatrix r = haar_random({2, 2}, 1000 + i).reduced({0});
        sum += (r.matrix() * r.matrix()).trace().real();
    }
    const double mean = sum / samples;
    EXPECT_NEAR(mean, 4.0 / 5.0, 0.005);
}

TEST(PureStateConstruction, RejectsBadInput) {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = 0.9;
    EXPECT_THROW(PureState(v, {2, 2}), ArgumentError);
    EXPECT_THROW(PureState(ComplexVector::Zero(5), {2, 3}), ArgumentError);
    EXPECT_THROW(haar_random({2, 0}, 1), ArgumentError);
}

TEST(TensorProductAndBasis, Composes) {
    const PureState p = tensor_product(bell_like(0.6), basis_state({2}, {1}));
    EXPECT_EQ(p.dims(), (Dims{2, 2, 2}));
    EXPECT_NEAR(p.amplitudes()(1).real(), 0.6, 1e-15);
    EXPECT_NEAR(p.amplitudes()(7).real(), 0.8, 1e-15);
    EXPECT_NEAR(basis_state({2, 3}, {1, 2}).amplitudes()(5).real(), 1.0, 0.0);
}

TEST(StateFile, RoundTrip) {
    const PureState psi = haar_random({2, 2, 3}, 9);
    const PureState back = parse_state(serialize_state(psi));
    EXPECT_EQ(back.dims(), psi.dims());
    EXPECT_LT((back.amplitudes() - psi.amplitudes()).norm(), 1e-15);
    const auto path = std::filesystem::temp_directory_path() / "eoftangle_roundtrip.json";
    save_state(psi, path);
    EXPECT_LT((load_state(path).amplitudes() - psi.amplitudes()).norm(), 1e-15);
    std::filesystem::remove(path);
}

TEST(StateFile, RejectsUnnormalized) {
    try {
        parse_state(R"({"dims":[2],"amplitudes":[[0.9,0],[0,0]]})");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("normalization"), std::string::npos);
    }
}

TEST(StateFile, RejectsDimensionMismatch) {
    try {
        parse_state(R"({"dims":[2,3],"amplitudes":[[1,0],[0,0],[0,0],[0,0],[0,0]]})");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("dimension mismatch"), std::string::npos);
    }
}

TEST(StateFile, RejectsMalformed) {
    EXPECT_THROW(parse_state("not json"), FormatError);
    EXPECT_THROW(parse_state(R"({"dims":[2]})"), FormatError);
    EXPECT_THROW(parse_state(R"({"dims":[2],"amplitudes":[[1,0],[0]]})"), FormatError);
    EXPECT_THROW(load_state("/nonexistent/state.json"), FormatError);
}

} // namespace
} // namespace eoft
