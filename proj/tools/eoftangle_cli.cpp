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

// eoftangle command-line front end.
//
// Exit codes: 0 success or audit pass, 1 audit failure, 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "eoftangle/audit.hpp"
#include "eoftangle/damping_dynamics.hpp"
#include "eoftangle/errors.hpp"
#include "eoftangle/report.hpp"
#include "eoftangle/scans.hpp"
#include "eoftangle/state_factory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAuditFail = 1;
constexpr int kExitUsage = 2;

struct Grid {
    int rows = 0;
    int cols = 0;
};

Grid parse_grid(const std::string& text) {
    static const std::regex pattern(R"((\d+)(?:[xX](\d+))?)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw eoft::ArgumentError("--grid expects N or NxM, got '" + text + "'");
    }
    Grid g;
    g.rows = std::stoi(m[1].str());
    g.cols = m[2].matched ? std::stoi(m[2].str()) : g.rows;
    if (g.rows < 2 || g.cols < 2) {
        throw eoft::ArgumentError("grid resolutions must be at least 2");
    }
    return g;
}

// Writes to --out when given, stdout otherwise.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw eoft::FormatError("cannot open output file " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

  private:
    std::ofstream file_;
};

eoft::Execution execution(bool serial) { return serial ? eoft::Execution::serial : eoft::Execution::parallel; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlation, discord and EOF-tangle analysis of tripartite pure states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", eoft::version());

    std::string out_path;
    bool serial = false;

    auto* analyze = app.add_subcommand("analyze", "JSON report for a (2,2,2) or (2,2,N) state file");
    std::string state_path;
    analyze->add_option("state", state_path, "state file")->required();
    analyze->add_option("--out", out_path, "output path (default stdout)");

    std::string grid_text = "50x50";
    auto* scan_w = app.add_subcommand("scan-w", "tangles over the interior of the W-family (theta, phi) square");
    scan_w->add_option("--grid", grid_text, "N or NxM interior grid")->capture_default_str();
    scan_w->add_option("--out", out_path, "output CSV path (default stdout)");
    scan_w->add_flag("--serial", serial, "use the serial reference kernel");

    std::string ghz_grid_text = "10x8";
    auto* scan_ghz = app.add_subcommand("scan-ghz", "tangles and discords over GHZ-family amplitudes");
    scan_ghz->add_option("--grid", ghz_grid_text, "N or NxM: magnitude angle x relative phase")
        ->capture_default_str();
    scan_ghz->add_option("--out", out_path, "output CSV path (default stdout)");
    scan_ghz->add_flag("--serial", serial, "use the serial reference kernel");

    eoft::DampingParams damping;
    double lambda_ratio = damping.lambda / damping.gamma0;
    double t_max = 40.0;
    int t_steps = 2000;
    auto* dynamics = app.add_subcommand("dynamics", "two qubits under Lorentzian amplitude damping, CSV trace");
    dynamics->add_option("--a", damping.a, "initial amplitude a in a|00> + sqrt(1-a^2)|11>")->capture_default_str();
    dynamics->add_option("--lambda-over-gamma0", lambda_ratio, "bath width in units of gamma0")
        ->capture_default_str();
    dynamics->add_option("--t-max", t_max, "final time in units of 1/gamma0")->capture_default_str();
    dynamics->add_option("--t-steps", t_steps, "number of grid times")->capture_default_str();
    dynamics->add_option("--out", out_path, "output CSV path (default stdout)");
    dynamics->add_flag("--serial", serial, "use the serial reference kernel");

    std::size_t n_states = 100;
    std::uint64_t seed = eoft::kDefaultAuditSeed;
    eoft::AuditTolerances tolerances;
    auto* audit = app.add_subcommand("random-audit", "identity audit over seeded Haar-random three-qubit states");
    audit->add_option("--states", n_states, "number of states")->capture_default_str();
    audit->add_option("--seed", seed, "first seed")->capture_default_str();
    audit->add_option("--tolerance", tolerances.identity, "tolerance for optimizer-limited identities")
        ->capture_default_str();
    audit->add_option("--out", out_path, "output JSON path (default stdout)");
    audit->add_flag("--serial", serial, "use the serial reference kernel");

    std::string kind;
    double theta = 0.0;
    double phi = 0.0;
    std::uint64_t state_seed = 1;
    auto* make_state = app.add_subcommand("make-state", "write a named state to a state file");
    make_state->add_option("--kind", kind, "ghz | w | w-balanced | ghz-balanced | product | haar | dilation")
        ->required()
        ->check(CLI::IsMember({"ghz", "w", "w-balanced", "ghz-balanced", "product", "haar", "dilation"}));
    make_state->add_option("--theta", theta, "GHZ magnitude angle or W polar angle; dilation time");
    make_state->add_option("--phi", phi, "GHZ relative phase or W azimuth");
    make_state->add_option("--seed", state_seed, "seed for --kind haar");
    make_state->add_option("--a", damping.a, "initial amplitude for --kind dilation");
    make_state->add_option("--lambda-over-gamma0", lambda_ratio, "bath width for --kind dilation");
    make_state->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            const eoft::PureState psi = eoft::load_state(state_path);
            Output out(out_path);
            out.stream() << eoft::analyze_report(psi).dump(2) << "\n";
            return kExitOk;
        }
        if (scan_w->parsed()) {
            const Grid g = parse_grid(grid_text);
            const auto rows = eoft::scan_w(g.rows, g.cols, execution(serial));
            Output out(out_path);
            eoft::write_w_csv(out.stream(), rows);
            return kExitOk;
        }
        if (scan_ghz->parsed()) {
            const Grid g = parse_grid(ghz_grid_text);
            const auto rows = eoft::scan_ghz(g.rows, g.cols, execution(serial));
            Output out(out_path);
            eoft::write_ghz_csv(out.stream(), rows);
            return kExitOk;
        }
        if (dynamics->parsed()) {
            damping.gamma0 = 1.0;
            damping.lambda = lambda_ratio;
            const auto times = eoft::uniform_time_grid(t_max, t_steps);
            const auto trace = eoft::scan(damping, times, execution(serial));
            Output out(out_path);
            eoft::write_dynamics_csv(out.stream(), trace);
            return kExitOk;
        }
        if (audit->parsed()) {
            if (!(tolerances.identity > 0.0)) {
                throw eoft::ArgumentError("--tolerance must be positive");
            }
            const auto summary = eoft::random_audit(n_states, seed, tolerances, execution(serial));
            Output out(out_path);
            out.stream() << eoft::audit_json(summary).dump(2) << "\n";
            return summary.passed ? kExitOk : kExitAuditFail;
        }
        if (make_state->parsed()) {
            std::optional<eoft::PureState> psi;
            if (kind == "ghz") {
                psi = eoft::ghz(std::cos(theta), std::polar(std::sin(theta), phi));
            } else if (kind == "ghz-balanced") {
                psi = eoft::ghz(std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0);
            } else if (kind == "w") {
                psi = eoft::w({theta, phi});
            } else if (kind == "w-balanced") {
                psi = eoft::w(eoft::WParams::balanced());
            } else if (kind == "product") {
                psi = eoft::basis_state({2, 2, 2}, {0, 0, 0});
            } else if (kind == "haar") {
                psi = eoft::haar_random({2, 2, 2}, state_seed);
            } else {
                damping.gamma0 = 1.0;
                damping.lambda = lambda_ratio;
                psi = eoft::purified_tripartite(theta, damping);
            }
            Output out(out_path);
            out.stream() << eoft::serialize_state(*psi);
            return kExitOk;
        }
    } catch (const eoft::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eoft::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eoft::ConsistencyError& e) {
        std::cerr << "consistency check failed: " << e.what() << "\n";
        return kExitAuditFail;
    }
    return kExitUsage;
}
