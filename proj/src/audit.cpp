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

#include "eoftangle/audit.hpp"

#include <algorithm>
#include <cmath>

#include "eoftangle/entanglement.hpp"
#include "eoftangle/errors.hpp"
#include "eoftangle/monogamy.hpp"

namespace eoft {

std::string_view to_string(AuditCheckId id) {
    switch (id) {
    case AuditCheckId::conservation_law:
        return "conservation_law";
    case AuditCheckId::discrepancy_conservation:
        return "discrepancy_conservation";
    case AuditCheckId::flow_equality:
        return "flow_equality";
    case AuditCheckId::pivot_routes:
        return "pivot_routes";
    case AuditCheckId::tangle_identity:
        return "tangle_identity";
    case AuditCheckId::koashi_winter:
        return "koashi_winter";
    case AuditCheckId::ckw_nonnegativity:
        return "ckw_nonnegativity";
    case AuditCheckId::sign_coherence:
        return "sign_coherence";
    case AuditCheckId::bound_implication:
        return "bound_implication";
    }
    return "unknown";
}

double check_tolerance(AuditCheckId id, const AuditTolerances& tol) {
    switch (id) {
    case AuditCheckId::pivot_routes:
    case AuditCheckId::tangle_identity:
        return tol.route;
    case AuditCheckId::ckw_nonnegativity:
        return tol.ckw;
    case AuditCheckId::sign_coherence:
        return 0.5;  // violation is 0 or 1
    default:
        return tol.identity;
    }
}

StateAudit audit_state(const PureState& psi, const AuditTolerances& tol) {
    if (psi.dims() != Dims{2, 2, 2}) {
        throw ArgumentError("the identity audit runs on three-qubit states");
    }
    const TangleReport r = tau_total(psi);
    const DensityMatrix rho = psi.density();
    PairTable eof{};
    for (int x = 0; x < 3; ++x) {
        for (int y = x + 1; y < 3; ++y) {
            const double e = eof_two_qubit(partial_trace(rho, {x, y})).value;
            eof[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = e;
            eof[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = e;
        }
    }

    StateAudit out;
    auto raise = [&out](AuditCheckId id, double v) {
        auto& slot = out.violation[static_cast<std::size_t>(id)];
        slot = std::max(slot, v);
    };

    for (std::size_t x = 0; x < 3; ++x) {
        const std::size_t y = (x + 1) % 3;
        const std::size_t z = (x + 2) % 3;
        raise(AuditCheckId::conservation_law,
              std::abs(eof[x][y] + eof[x][z] - r.discord[x][y] - r.discord[x][z]));
        raise(AuditCheckId::pivot_routes, std::abs(r.tau[x] - r.tau_from_discrepancy[x]));

        // delta_XY - S(X|Z) against E_XZ, and delta_XZ - S(X|Y) against E_XY.
        const double cond_xz = r.entropy[y] - r.entropy[z];  // S(X|Z) = S_XZ - S_Z = S_Y - S_Z
        const double cond_xy = r.entropy[z] - r.entropy[y];
        raise(AuditCheckId::koashi_winter, std::abs(r.discord[x][y] - cond_xz - eof[x][z]));
        raise(AuditCheckId::koashi_winter, std::abs(r.discord[x][z] - cond_xy - eof[x][y]));

        const MonogamyVerdict v = monogamy_predicate(r, static_cast<int>(x));
        raise(AuditCheckId::sign_coherence, v.sign_agrees ? 0.0 : 1.0);
        if (r.tau[x] < -kMonogamyTolerance) {
            ++out.negative_tau_pivots;
        }
        for (std::size_t partner : {y, z}) {
            const SquashedBoundAudit b =
                squashed_bound_audit(psi, r, static_cast<int>(x), static_cast<int>(partner), tol.identity);
            if (b.applies) {
                raise(AuditCheckId::bound_implication, std::max(0.0, b.lhs - b.mutual_info));
            }
        }
    }
    raise(AuditCheckId::discrepancy_conservation, discrepancy_conservation_check(r));
    raise(AuditCheckId::flow_equality,
          std::max(std::abs(r.flow_L_cw - r.flow_L_ccw), std::abs(r.flow_J_cw - r.flow_J_ccw)));
    raise(AuditCheckId::tangle_identity, std::abs(r.tau_total - (r.flow_J_cw - r.flow_L_cw)));
    raise(AuditCheckId::tangle_identity, std::abs(r.tau_total - r.discrepancy_flow_cw()));
    raise(AuditCheckId::ckw_nonnegativity, std::max(0.0, -r.concurrence_tangle.value_or(0.0)));
    out.tau_a = r.tau[0];
    return out;
}

AuditSummary audit_cases(std::span<const AuditCase> cases, const AuditTolerances& tol, Execution exec) {
    const auto audits =
        parallel_map(cases.size(), [&](std::size_t i) { return audit_state(cases[i].state, tol); }, exec);

    AuditSummary summary;
    summary.n_states = cases.size();
    for (std::size_t c = 0; c < kAuditCheckCount; ++c) {
        AuditCheck check;
        check.id = static_cast<AuditCheckId>(c);
        check.tolerance = check_tolerance(check.id, tol);
        for (std::size_t i = 0; i < audits.size(); ++i) {
            const double v = audits[i].violation[c];
            check.max_violation = std::max(check.max_violation, v);
            if (v > check.tolerance) {
                check.offenders.push_back(cases[i].label);
            }
        }
        check.passed = check.offenders.empty();
        summary.passed = summary.passed && check.passed;
        summary.checks.push_back(std::move(check));
    }
    for (const StateAudit& a : audits) {
        summary.states_with_negative_tau += a.negative_tau_pivots > 0 ? 1 : 0;
    }
    return summary;
}

std::vector<AuditCase> haar_cases(std::size_t n_states, std::uint64_t seed) {
    std::vector<AuditCase> cases;
    cases.reserve(n_states);
    for (std::size_t i = 0; i < n_states; ++i) {
        const std::uint64_t s = seed + i;
        cases.push_back({std::to_string(s), haar_random({2, 2, 2}, s)});
    }
    return cases;
}

AuditSummary random_audit(std::size_t n_states, std::uint64_t seed, const AuditTolerances& tol, Execution exec) {
    if (n_states < 1) {
        throw ArgumentError("random audit needs at least one state");
    }
    const auto cases = haar_cases(n_states, seed);
    AuditSummary summary = audit_cases(cases, tol, exec);
    summary.seed = seed;
    return summary;
}

} // namespace eoft
