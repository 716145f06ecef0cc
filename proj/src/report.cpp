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

#include "eoftangle/report.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "eoftangle/correlations.hpp"
#include "eoftangle/entanglement.hpp"
#include "eoftangle/errors.hpp"

namespace eoft {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 3> kPartyNames{"A", "B", "C"};

std::string pair_name(std::size_t x, std::size_t y) { return std::string(kPartyNames[x]) + kPartyNames[y]; }

bool is_ghz_support(const PureState& psi) {
    if (psi.dims() != Dims{2, 2, 2}) {
        return false;
    }
    const auto& amps = psi.amplitudes();
    for (Eigen::Index i = 1; i < 7; ++i) {
        if (std::abs(amps(i)) > 1e-12) {
            return false;
        }
    }
    return std::abs(amps(0)) > 1e-12 && std::abs(amps(7)) > 1e-12;
}

} // namespace

std::string version() { return EOFTANGLE_VERSION; }

json tolerances_json() {
    return {
        {"entropy_cutoff", kEntropyCutoff},
        {"outcome_cutoff", kOutcomeCutoff},
        {"discord_clamp", kDiscordClamp},
        {"monogamy_tie", kMonogamyTolerance},
        {"route_agreement", kRouteAgreement},
        {"optimizer",
         {{"grid_theta", SphereSearchSettings{}.grid_theta},
          {"grid_phi", SphereSearchSettings{}.grid_phi},
          {"starts", SphereSearchSettings{}.starts},
          {"max_refine_evaluations", SphereSearchSettings{}.max_refine_evaluations},
          {"objective_tolerance", SphereSearchSettings{}.tolerance}}},
    };
}

json analyze_report(const PureState& psi) {
    const TangleReport r = tangle_report(psi);
    const DensityMatrix rho = psi.density();

    json doc;
    doc["version"] = version();
    doc["dims"] = psi.dims();
    doc["tolerances"] = tolerances_json();
    doc["route"] = std::string(to_string(r.route));
    doc["entropies"] = {{"A", r.entropy[0]}, {"B", r.entropy[1]}, {"C", r.entropy[2]}};

    json pairs = json::array();
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            if (x == y) {
                continue;
            }
            json p;
            p["conditioned"] = kPartyNames[x];
            p["measured"] = kPartyNames[y];
            p["mutual_info"] = r.mutual_info[x][y];
            p["classical"] = r.classical[x][y];
            p["discord"] = r.discord[x][y];
            p["discrepancy"] = r.discrepancy[x][y];
            p["measured_cond_entropy"] = r.entropy[x] - r.classical[x][y];
            if (const auto& basis = r.optimal_basis[x][y]) {
                p["source"] = "optimized";
                p["optimal_basis"] = {{"theta", basis->bloch_theta}, {"phi", basis->bloch_phi}};
            } else {
                p["source"] = "eof_identity";
                p["optimal_basis"] = nullptr;
            }
            pairs.push_back(std::move(p));
        }
    }
    doc["pairs"] = std::move(pairs);

    json eof;
    for (std::size_t x = 0; x < 3; ++x) {
        eof[std::string(kPartyNames[x]) + "|rest"] =
            eof_pure_partition(psi, {static_cast<int>(x)}).value;
        for (std::size_t y = x + 1; y < 3; ++y) {
            const DensityMatrix pair = partial_trace(rho, {static_cast<int>(x), static_cast<int>(y)});
            if (pair.dims() == Dims{2, 2}) {
                eof[pair_name(x, y)] = eof_two_qubit(pair).value;
            } else {
                // Koashi-Winter through the remaining qubit.
                eof[pair_name(x, y)] = eof_koashi_winter(psi, static_cast<int>(x), static_cast<int>(y)).value;
            }
        }
    }
    doc["eof"] = std::move(eof);

    doc["tangle"] = {
        {"tau_A", r.tau[0]},
        {"tau_B", r.tau[1]},
        {"tau_C", r.tau[2]},
        {"tau_from_discrepancy", r.tau_from_discrepancy},
        {"tau_ABC", r.tau_total},
        {"flow_L_cw", r.flow_L_cw},
        {"flow_L_ccw", r.flow_L_ccw},
        {"flow_J_cw", r.flow_J_cw},
        {"flow_J_ccw", r.flow_J_ccw},
        {"discrepancy_flow_cw", r.discrepancy_flow_cw()},
    };

    json monogamy = json::array();
    for (int x = 0; x < 3; ++x) {
        const MonogamyVerdict v = monogamy_predicate(r, x);
        monogamy.push_back({{"pivot", kPartyNames[static_cast<std::size_t>(x)]},
                            {"monogamous", v.monogamous},
                            {"margin", v.margin},
                            {"boundary", v.boundary},
                            {"sign_agrees", v.sign_agrees},
                            {"measured_entropy_sum", v.measured_entropy_sum},
                            {"in_nonmonogamous_window", v.in_nonmonogamous_window}});
    }
    doc["monogamy"] = std::move(monogamy);
    doc["concurrence_tangle"] = r.concurrence_tangle ? json(*r.concurrence_tangle) : json(nullptr);

    json checks;
    double route_gap = 0.0;
    for (std::size_t x = 0; x < 3; ++x) {
        route_gap = std::max(route_gap, std::abs(r.tau[x] - r.tau_from_discrepancy[x]));
    }
    checks["pivot_route_gap"] = route_gap;
    checks["flow_L_gap"] = std::abs(r.flow_L_cw - r.flow_L_ccw);
    checks["flow_J_gap"] = std::abs(r.flow_J_cw - r.flow_J_ccw);
    checks["tangle_identity_gap"] = std::abs(r.tau_total - (r.flow_J_cw - r.flow_L_cw));
    checks["discrepancy_conservation"] = discrepancy_conservation_check(r);
    doc["checks"] = std::move(checks);

    if (is_ghz_support(psi)) {
        // Each pivot of a GHZ-class state carries its own tangle; the total
        // is their sum, so a balanced GHZ state totals 3, not 1.
        doc["ghz_family"] = {
            {"single_pivot_tau", r.tau[0]},
            {"tau_ABC", r.tau_total},
            {"tau_ABC_over_tau_A", r.tau[0] != 0.0 ? json(r.tau_total / r.tau[0]) : json(nullptr)},
            {"total_equals_single_pivot", std::abs(r.tau_total - r.tau[0]) <= kRouteAgreement},
        };
    }
    return doc;
}

json audit_json(const AuditSummary& summary) {
    json doc;
    doc["version"] = version();
    doc["tolerances"] = tolerances_json();
    doc["n_states"] = summary.n_states;
    doc["seed"] = summary.seed;
    doc["states_with_negative_tau"] = summary.states_with_negative_tau;
    json checks = json::array();
    for (const AuditCheck& c : summary.checks) {
        checks.push_back({{"name", std::string(to_string(c.id))},
                          {"max_violation", c.max_violation},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed},
                          {"offenders", c.offenders}});
    }
    doc["checks"] = std::move(checks);
    doc["passed"] = summary.passed;
    return doc;
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

void write_w_csv(std::ostream& out, std::span<const WScanRow> rows) {
    out << "theta,phi,tau_abc,tau_a,tau_b,tau_c\n";
    for (const WScanRow& r : rows) {
        out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.theta, r.phi, r.tau_abc, r.tau_a,
                           r.tau_b, r.tau_c);
    }
}

void write_ghz_csv(std::ostream& out, std::span<const GhzScanRow> rows) {
    out << "theta,phi,tau_abc,tau_a,tau_b,tau_c,max_discord\n";
    for (const GhzScanRow& r : rows) {
        out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.theta, r.phi, r.tau_abc,
                           r.tau_a, r.tau_b, r.tau_c, r.max_discord);
    }
}

void write_dynamics_csv(std::ostream& out, const DynamicsTrace& trace) {
    out << "time,G,E_AB,delta_AB,delta_BA,J_AB,J_BA,tau_A,tau_B,tau_C,tau_ABC,concurrence\n";
    for (const DynamicsRecord& r : trace.records) {
        out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},"
                           "{:.17g}\n",
                           r.time, r.amplitude, r.eof_ab, r.discord_ab, r.discord_ba, r.classical_ab, r.classical_ba,
                           r.tau_a, r.tau_b, r.tau_c, r.tau_abc, r.concurrence);
    }
}

} // namespace eoft
