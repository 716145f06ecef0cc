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

#include <span>
#include <string_view>

#include "eoftangle/state_factory.hpp"
#include "eoftangle/tensor_core.hpp"

namespace eoft {

enum class EofMethod { pure_partition, wootters, koashi_winter };

std::string_view to_string(EofMethod method);

struct EntanglementValue {
    double value = 0.0;  // bits
    EofMethod method = EofMethod::wootters;
};

/// Wootters concurrence of a two-qubit state. The spin flip conjugates in
/// the computational product basis.
double concurrence(const DensityMatrix& pair);

/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double c);

EntanglementValue eof_two_qubit(const DensityMatrix& pair);

/// E between `party_set` and its complement in a pure state: the entropy of
/// the reduction.
EntanglementValue eof_pure_partition(const PureState& psi, std::span<const int> party_set);
EntanglementValue eof_pure_partition(const PureState& psi, std::initializer_list<int> party_set);

/// EOF of (pivot, partner) in a pure tripartite state from the discord of
/// the pivot with the remaining party: E_AC = delta_AB - S(A|C). The
/// remaining party is the one measured and must be a qubit; the pivot and
/// partner may have any dimension.
EntanglementValue eof_koashi_winter(const PureState& psi, int pivot, int partner);

/// CKW residual 4 det(rho_A) - C_AB^2 - C_AC^2 for three qubits.
double concurrence_tangle(const PureState& psi);

} // namespace eoft
