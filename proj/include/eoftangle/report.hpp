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

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "eoftangle/audit.hpp"
#include "eoftangle/damping_dynamics.hpp"
#include "eoftangle/monogamy.hpp"
#include "eoftangle/scans.hpp"
#include "eoftangle/state_factory.hpp"

namespace eoft {

std::string version();

/// Tolerance block embedded in every JSON document.
nlohmann::json tolerances_json();

/// Full correlation / tangle report of a (2, 2, 2) or (2, 2, N) pure state.
/// Throws UnsupportedDimensionError for other shapes.
nlohmann::json analyze_report(const PureState& psi);

nlohmann::json audit_json(const AuditSummary& summary);

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double x);

/// theta,phi,tau_abc,tau_a,tau_b,tau_c
void write_w_csv(std::ostream& out, std::span<const WScanRow> rows);
/// theta,phi,tau_abc,tau_a,tau_b,tau_c,max_discord
void write_ghz_csv(std::ostream& out, std::span<const GhzScanRow> rows);
/// time,G,E_AB,delta_AB,delta_BA,J_AB,J_BA,tau_A,tau_B,tau_C,tau_ABC,concurrence
void write_dynamics_csv(std::ostream& out, const DynamicsTrace& trace);

} // namespace eoft
