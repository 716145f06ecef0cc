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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "eoftangle/tensor_core.hpp"

namespace eoft {

inline constexpr double kStateNormTolerance = 1e-10;
/// Looser normalization slack admitted for hand-written state files.
inline constexpr double kFileNormTolerance = 1e-6;

/// Normalized amplitude vector over a tensor product of subsystems.
class PureState {
  public:
    PureState(ComplexVector amplitudes, Dims dims);

    const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
    const Dims& dims() const noexcept { return dims_; }
    int num_parties() const noexcept { return static_cast<int>(dims_.size()); }

    DensityMatrix density() const;
    DensityMatrix reduced(std::span<const int> keep) const;
    DensityMatrix reduced(std::initializer_list<int> keep) const;

  private:
    ComplexVector amplitudes_;
    Dims dims_;
};

/// Angles of the real W-family chart:
/// alpha = sin(theta) cos(phi), beta = sin(theta) sin(phi), gamma = cos(theta).
struct WParams {
    double theta = 0.0;
    double phi = 0.0;

    double alpha() const;
    double beta() const;
    double gamma() const;

    /// alpha = beta = gamma = 1/sqrt(3).
    static WParams balanced();
};

/// first |000> + second |111>; throws ArgumentError unless |first|^2 + |second|^2 = 1.
PureState ghz(Complex first, Complex second);

/// alpha |001> + beta |010> + gamma |100>.
PureState w(const WParams& params);

/// a |00> + sqrt(1 - a^2) |11>, a in [0, 1].
PureState bell_like(double a);

/// Unitarily invariant random pure state. Deterministic in `seed`.
PureState haar_random(Dims dims, std::uint64_t seed);

/// Computational basis vector with the given per-party levels.
PureState basis_state(Dims dims, std::span<const int> levels);
PureState basis_state(Dims dims, std::initializer_list<int> levels);

/// |a> (x) |b>, with the dimension lists concatenated.
PureState tensor_product(const PureState& a, const PureState& b);

/// State file codec: {"dims": [...], "amplitudes": [[re, im], ...]}.
/// Parsing throws FormatError naming the offending field.
PureState parse_state(std::string_view json_text);
std::string serialize_state(const PureState& state);

PureState load_state(const std::filesystem::path& path);
void save_state(const PureState& state, const std::filesystem::path& path);

} // namespace eoft
