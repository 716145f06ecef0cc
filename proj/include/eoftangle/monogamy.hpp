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
#include <optional>
#include <string_view>

#include "eoftangle/correlations.hpp"
#include "eoftangle/state_factory.hpp"

namespace eoft {

/// Tau values inside +-kMonogamyTolerance count as boundary-monogamous.
inline constexpr double kMonogamyTolerance = 1e-6;
/// Agreement required between the two algebraic routes to a pivot tangle.
inline constexpr double kRouteAgreement = 1e-6;

enum class TangleRoute {
    direct,    // every ordered discord optimized (three qubits)
    shortcut,  // (2, 2, N): only Delta_AB, Delta_BA optimized, the rest via EOF identities
};

std::string_view to_string(TangleRoute route);

/// Per-ordered-pair table indexed [conditioned][measured]; diagonal unused.
using PairTable = std::array<std::array<double, 3>, 3>;

struct TangleReport {
    TangleRoute route = TangleRoute::direct;
    std::array<double, 3> entropy{};          // S_A, S_B, S_C
    PairTable mutual_info{};
    PairTable classical{};
    PairTable discord{};
    PairTable discrepancy{};
    /// Set for the ordered pairs that were optimized directly.
    std::array<std::array<std::optional<MeasurementBasis>, 3>, 3> optimal_basis{};
    std::array<double, 3> tau{};                  // S_X - delta_XY - delta_XZ
    std::array<double, 3> tau_from_discrepancy{}; // (Delta_XY + Delta_XZ) / 2
    double tau_total = 0.0;                       // tau_A + tau_B + tau_C
    double flow_L_cw = 0.0;   // delta_BA + delta_CB + delta_AC
    double flow_L_ccw = 0.0;  // delta_CA + delta_BC + delta_AB
    double flow_J_cw = 0.0;
    double flow_J_ccw = 0.0;
    std::array<bool, 3> monogamous{};
    std::optional<double> concurrence_tangle;  // three qubits only

    /// Delta_BA + Delta_CB + Delta_AC.
    double discrepancy_flow_cw() const;
};

/// Pivot tangle S_X - delta_XY - delta_XZ, cross-checked against the
/// discrepancy average (ConsistencyError if they differ by more than 1e-6).
double tau_pivot(const PureState& psi, int pivot);

/// Full report from six direct optimizations; three qubits only.
TangleReport tau_total(const PureState& psi);

/// Full report for dims (2, 2, N) from rho_AB alone:
/// Delta_AC = Delta_BC = I_AB - 2 E_AB, Delta_CA = Delta_BA, Delta_CB = Delta_AB.
TangleReport tau_total_22N(const PureState& psi);

/// Picks tau_total for three qubits, tau_total_22N for other (2, 2, N)
/// states, and throws UnsupportedDimensionError otherwise.
TangleReport tangle_report(const PureState& psi);

/// max(|Delta_AB - Delta_CB|, |Delta_AC - Delta_BC|, |Delta_BA - Delta_CA|), three qubits.
double discrepancy_conservation_check(const PureState& psi);
double discrepancy_conservation_check(const TangleReport& report);

/// |E_XY + E_XZ - delta_XY - delta_XZ| for pivot X, three qubits.
double conservation_law_check(const PureState& psi, int pivot = 0);

struct MonogamyVerdict {
    int pivot = 0;
    bool monogamous = false;   // J_XY + J_XZ >= delta_XY + delta_XZ (ties allowed)
    double margin = 0.0;       // J_XY + J_XZ - delta_XY - delta_XZ
    double tau = 0.0;
    bool boundary = false;     // |tau| <= 1e-6
    bool sign_agrees = false;  // monogamous == (tau >= -1e-6)
    /// S_X < S_q(X|Y) + S_q(X|Z) <= 2 S_X, the non-monogamous window.
    bool in_nonmonogamous_window = false;
    double measured_entropy_sum = 0.0;  // S_q(X|Y) + S_q(X|Z)
};

MonogamyVerdict monogamy_predicate(const TangleReport& report, int pivot);
MonogamyVerdict monogamy_predicate(const PureState& psi, int pivot);

struct SquashedBoundAudit {
    int pivot = 0;
    int partner = 1;
    double eof = 0.0;              // E_XY (Wootters)
    double discord = 0.0;          // delta_XY
    double lhs = 0.0;              // E_XY + delta_XY
    double mutual_info = 0.0;      // I_XY
    double tau = 0.0;
    bool applies = false;          // tau_X >= 0 (within the tie tolerance)
    bool holds = true;             // !applies || lhs <= I_XY + tolerance
};

/// Audits: if tau_X >= 0 then E_XY + delta_XY <= I_XY. The pair (X, Y) must
/// be two qubits.
SquashedBoundAudit squashed_bound_audit(const PureState& psi, int pivot, int partner, double tolerance = 5e-4);
SquashedBoundAudit squashed_bound_audit(const PureState& psi, const TangleReport& report, int pivot, int partner,
                                        double tolerance = 5e-4);

} // namespace eoft
