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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eoftangle/parallel.hpp"
#include "eoftangle/state_factory.hpp"

namespace eoft {

inline constexpr std::uint64_t kDefaultAuditSeed = 20110601;

struct AuditTolerances {
    double identity = 5e-4;  // optimizer-limited identities
    double route = 1e-6;     // algebraically exact rewrites
    double ckw = 1e-8;       // CKW residual may dip this far below zero
};

/// Fixed order of audited identities.
enum class AuditCheckId {
    conservation_law,          // E_XY + E_XZ = delta_XY + delta_XZ
    discrepancy_conservation,  // Delta_XY = Delta_ZY
    flow_equality,             // L_cw = L_ccw and J_cw = J_ccw
    pivot_routes,              // S_X - delta_XY - delta_XZ = (Delta_XY + Delta_XZ)/2
    tangle_identity,           // tau_A + tau_B + tau_C = J_cw - L_cw
    koashi_winter,             // delta_XY - S(X|Z) = E_XZ (Wootters)
    ckw_nonnegativity,         // 4 det rho_A - C_AB^2 - C_AC^2 >= 0
    sign_coherence,            // monogamy predicate matches sign(tau)
    bound_implication,         // tau_X >= 0 => E_XY + delta_XY <= I_XY
};
inline constexpr std::size_t kAuditCheckCount = 9;

std::string_view to_string(AuditCheckId id);

/// Violation of every check for one state, plus bookkeeping.
struct StateAudit {
    std::array<double, kAuditCheckCount> violation{};
    int negative_tau_pivots = 0;
    double tau_a = 0.0;
};

struct AuditCase {
    std::string label;  // seed or a name for injected states
    PureState state;
};

struct AuditCheck {
    AuditCheckId id{};
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    std::vector<std::string> offenders;  // labels of failing states
};

struct AuditSummary {
    std::size_t n_states = 0;
    std::uint64_t seed = 0;
    int states_with_negative_tau = 0;
    std::vector<AuditCheck> checks;
    bool passed = true;
};

double check_tolerance(AuditCheckId id, const AuditTolerances& tol);

/// Runs every check on one three-qubit pure state.
StateAudit audit_state(const PureState& psi, const AuditTolerances& tol = {});

AuditSummary audit_cases(std::span<const AuditCase> cases, const AuditTolerances& tol = {},
                         Execution exec = Execution::parallel);

/// Haar-random three-qubit states with seeds seed, seed + 1, ...
std::vector<AuditCase> haar_cases(std::size_t n_states, std::uint64_t seed);

AuditSummary random_audit(std::size_t n_states, std::uint64_t seed = kDefaultAuditSeed,
                          const AuditTolerances& tol = {}, Execution exec = Execution::parallel);

} // namespace eoft
