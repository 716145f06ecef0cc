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

#include "eoftangle/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eoftangle/entanglement.hpp"
#include "eoftangle/errors.hpp"

namespace eoft {

namespace {

bool is_three_qubits(const PureState& psi) { return psi.dims() == Dims{2, 2, 2}; }

bool is_22n(const PureState& psi) {
    const Dims& d = psi.dims();
    return d.size() == 3 && d[0] == 2 && d[1] == 2;
}

void check_pivot(int pivot) {
    if (pivot < 0 || pivot > 2) {
        throw ArgumentError("pivot must be 0, 1 or 2");
    }
}

void require_tripartite(const PureState& psi) {
    if (psi.num_parties() != 3) {
        throw ArgumentError("tangles are defined for tripartite pure states");
    }
}

void store(TangleReport& report, const CorrelationReport& r) {
    const auto x = static_cast<std::size_t>(r.conditioned);
    const auto y = static_cast<std::size_t>(r.measured);
    report.mutual_info[x][y] = r.mutual_info;
    report.classical[x][y] = r.classical;
    report.discord[x][y] = r.discord;
    report.discrepancy[x][y] = r.discrepancy;
    report.optimal_basis[x][y] = r.optimal_basis;
}

// Fills the derived fields once the four pair tables and the entropies are set.
void finalize(TangleReport& report) {
    const auto& d = report.discord;
    const auto& j = report.classical;
    for (std::size_t x = 0; x < 3; ++x) {
        const std::size_t y = (x + 1) % 3;
        const std::size_t z = (x + 2) % 3;
        report.tau[x] = report.entropy[x] - d[x][y] - d[x][z];
        report.tau_from_discrepancy[x] = 0.5 * (report.discrepancy[x][y] + report.discrepancy[x][z]);
        if (std::abs(report.tau[x] - report.tau_from_discrepancy[x]) > kRouteAgreement) {
            throw ConsistencyError("pivot tangle routes disagree by " +
                                   std::to_string(std::abs(report.tau[x] - report.tau_from_discrepancy[x])));
        }
        report.monogamous[x] = report.tau[x] >= -kMonogamyTolerance;
    }
    report.tau_total = report.tau[0] + report.tau[1] + report.tau[2];
    report.flow_L_cw = d[1][0] + d[2][1] + d[0][2];
    report.flow_L_ccw = d[2][0] + d[1][2] + d[0][1];
    report.flow_J_cw = j[1][0] + j[2][1] + j[0][2];
    report.flow_J_ccw = j[2][0] + j[1][2] + j[0][1];
}

} // namespace

std::string_view to_string(TangleRoute route) {
    return route == TangleRoute::direct ? "direct" : "shortcut_22N";
}

double TangleReport::discrepancy_flow_cw() const {
    return discrepancy[1][0] + discrepancy[2][1] + discrepancy[0][2];
}

double tau_pivot(const PureState& psi, int pivot) {
    require_tripartite(psi);
    check_pivot(pivot);
    const int y = (pivot + 1) % 3;
    const int z = (pivot + 2) % 3;
    const Dims& dims = psi.dims();
    if (dims[static_cast<std::size_t>(y)] != 2 || dims[static_cast<std::size_t>(z)] != 2) {
        if (is_22n(psi)) {
            return tau_total_22N(psi).tau[static_cast<std::size_t>(pivot)];
        }
        throw UnsupportedDimensionError("pivot tangle needs qubit partners or dims (2, 2, N)");
    }
    const DensityMatrix rho = psi.density();
    const CorrelationReport ry = pair_report(rho, pivot, y);
    const CorrelationReport rz = pair_report(rho, pivot, z);
    const double by_discord = ry.entropy_conditioned - ry.discord - rz.discord;
    const double by_discrepancy = 0.5 * (ry.discrepancy + rz.discrepancy);
    if (std::abs(by_discord - by_discrepancy) > kRouteAgreement) {
        throw ConsistencyError("pivot tangle routes disagree");
    }
    return by_discord;
}

TangleReport tau_total(const PureState& psi) {
    if (!is_three_qubits(psi)) {
        throw ArgumentError("direct tangle report needs three qubits; use tau_total_22N for (2, 2, N)");
    }
    const DensityMatrix rho = psi.density();
    TangleReport report;
    report.route = TangleRoute::direct;
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            if (x == y) {
                continue;
            }
            const CorrelationReport r = pair_report(rho, x, y);
            store(report, r);
            report.entropy[static_cast<std::size_t>(x)] = r.entropy_conditioned;
        }
    }
    finalize(report);
    report.concurrence_tangle = concurrence_tangle(psi);
    return report;
}

TangleReport tau_total_22N(const PureState& psi) {
    if (!is_22n(psi)) {
        throw ArgumentError("shortcut tangle report needs dims (2, 2, N)");
    }
    const DensityMatrix rho_ab = psi.reduced({0, 1});
    const CorrelationReport r_ab = pair_report(rho_ab, 0, 1);
    const CorrelationReport r_ba = pair_report(rho_ab, 1, 0);
    const double e_ab = eof_two_qubit(rho_ab).value;

    // Purity of ABC fixes every C entropy from rho_AB.
    const double s_a = r_ab.entropy_conditioned;
    const double s_b = r_ab.entropy_measured;
    const double s_ab = von_neumann_entropy(rho_ab);
    const double s_c = s_ab;
    const double i_ab = r_ab.mutual_info;
    const double i_ac = s_a + s_c - s_b;
    const double i_bc = s_b + s_c - s_a;

    TangleReport report;
    report.route = TangleRoute::shortcut;
    report.entropy = {s_a, s_b, s_c};
    const PairTable mutual{{{0.0, i_ab, i_ac}, {i_ab, 0.0, i_bc}, {i_ac, i_bc, 0.0}}};
    report.mutual_info = mutual;

    const double delta_via_eof = i_ab - 2.0 * e_ab;
    auto& dd = report.discrepancy;
    dd[0][1] = r_ab.discrepancy;
    dd[1][0] = r_ba.discrepancy;
    dd[0][2] = delta_via_eof;
    dd[1][2] = delta_via_eof;
    dd[2][1] = dd[0][1];
    dd[2][0] = dd[1][0];
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            if (x != y) {
                report.discord[x][y] = 0.5 * (mutual[x][y] - dd[x][y]);
                report.classical[x][y] = 0.5 * (mutual[x][y] + dd[x][y]);
            }
        }
    }
    store(report, r_ab);
    store(report, r_ba);

    finalize(report);
    if (psi.dims()[2] == 2) {
        report.concurrence_tangle = concurrence_tangle(psi);
    }
    return report;
}

TangleReport tangle_report(const PureState& psi) {
    if (is_three_qubits(psi)) {
        return tau_total(psi);
    }
    if (is_22n(psi)) {
        return tau_total_22N(psi);
    }
    throw UnsupportedDimensionError("tangle report supports dims (2, 2, 2) and (2, 2, N)");
}

double discrepancy_conservation_check(const TangleReport& report) {
    const auto& dd = report.discrepancy;
    return std::max({std::abs(dd[0][1] - dd[2][1]), std::abs(dd[0][2] - dd[1][2]), std::abs(dd[1][0] - dd[2][0])});
}

double discrepancy_conservation_check(const PureState& psi) {
    if (!is_three_qubits(psi)) {
        throw UnsupportedDimensionError("discrepancy conservation is checked by direct optimization on three qubits");
    }
    return discrepancy_conservation_check(tau_total(psi));
}

double conservation_law_check(const PureState& psi, int pivot) {
    if (!is_three_qubits(psi)) {
        throw UnsupportedDimensionError("conservation law check needs three qubits");
    }
    check_pivot(pivot);
    const int y = (pivot + 1) % 3;
    const int z = (pivot + 2) % 3;
    const DensityMatrix rho = psi.density();
    const double e_xy = eof_two_qubit(partial_trace(rho, {pivot, y})).value;
    const double e_xz = eof_two_qubit(partial_trace(rho, {pivot, z})).value;
    const double d_xy = pair_report(rho, pivot, y).discord;
    const double d_xz = pair_report(rho, pivot, z).discord;
    return std::abs(e_xy + e_xz - d_xy - d_xz);
}

MonogamyVerdict monogamy_predicate(const TangleReport& report, int pivot) {
    check_pivot(pivot);
    const auto x = static_cast<std::size_t>(pivot);
    const std::size_t y = (x + 1) % 3;
    const std::size_t z = (x + 2) % 3;
    MonogamyVerdict v;
    v.pivot = pivot;
    v.margin = report.classical[x][y] + report.classical[x][z] - report.discord[x][y] - report.discord[x][z];
    v.tau = report.tau[x];
    // margin = 2 tau, so the tie tolerance scales with it.
    v.monogamous = v.margin >= -2.0 * kMonogamyTolerance;
    v.boundary = std::abs(v.tau) <= kMonogamyTolerance;
    v.sign_agrees = v.monogamous == (v.tau >= -kMonogamyTolerance) &&
                    std::abs(v.margin - 2.0 * v.tau) <= kRouteAgreement;
    const double s_x = report.entropy[x];
    v.measured_entropy_sum = (s_x - report.classical[x][y]) + (s_x - report.classical[x][z]);
    v.in_nonmonogamous_window =
        v.measured_entropy_sum > s_x + kMonogamyTolerance && v.measured_entropy_sum <= 2.0 * s_x + kMonogamyTolerance;
    return v;
}

MonogamyVerdict monogamy_predicate(const PureState& psi, int pivot) {
    return monogamy_predicate(tangle_report(psi), pivot);
}

SquashedBoundAudit squashed_bound_audit(const PureState& psi, const TangleReport& report, int pivot, int partner,
                                        double tolerance) {
    check_pivot(pivot);
    check_pivot(partner);
    if (pivot == partner) {
        throw ArgumentError("pivot and partner must differ");
    }
    const DensityMatrix pair = psi.reduced({pivot, partner});
    if (pair.dims() != Dims{2, 2}) {
        throw UnsupportedDimensionError("bound audit needs a qubit pair");
    }
    const auto x = static_cast<std::size_t>(pivot);
    const auto y = static_cast<std::size_t>(partner);
    SquashedBoundAudit audit;
    audit.pivot = pivot;
    audit.partner = partner;
    audit.eof = eof_two_qubit(pair).value;
    audit.discord = report.discord[x][y];
    audit.lhs = audit.eof + audit.discord;
    audit.mutual_info = report.mutual_info[x][y];
    audit.tau = report.tau[x];
    audit.applies = report.monogamous[x];
    audit.holds = !audit.applies || audit.lhs <= audit.mutual_info + tolerance;
    return audit;
}

SquashedBoundAudit squashed_bound_audit(const PureState& psi, int pivot, int partner, double tolerance) {
    return squashed_bound_audit(psi, tangle_report(psi), pivot, partner, tolerance);
}

} // namespace eoft
