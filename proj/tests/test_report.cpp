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
#include <sstream>

#include "eoftangle/damping_dynamics.hpp"
#include "eoftangle/report.hpp"
#include "eoftangle/scans.hpp"
#include "eoftangle/state_factory.hpp"

namespace eoft {
namespace {

using nlohmann::json;

const double kInvSqrt2 = 1 / std::sqrt(2.0);

TEST(AnalyzeReport, BalancedGhz) {
    const json doc = analyze_report(ghz(kInvSqrt2, kInvSqrt2));
    EXPECT_EQ(doc["route"], "direct");
    ASSERT_EQ(doc["pairs"].size(), 6u);
    for (const json& p : doc["pairs"]) {
        EXPECT_NEAR(p["discord"].get<double>(), 0.0, 1e-6);
        EXPECT_EQ(p["source"], "optimized");
    }
    EXPECT_NEAR(doc["tangle"]["tau_A"].get<double>(), 1.0, 1e-6);
    EXPECT_NEAR(doc["tangle"]["tau_ABC"].get<double>(), 3.0, 1e-6);
    ASSERT_TRUE(doc.contains("ghz_family"));
    EXPECT_NEAR(doc["ghz_family"]["tau_ABC_over_tau_A"].get<double>(), 3.0, 1e-6);
    EXPECT_FALSE(doc["ghz_family"]["total_equals_single_pivot"].get<bool>());
    EXPECT_NEAR(doc["concurrence_tangle"].get<double>(), 1.0, 1e-10);
    EXPECT_TRUE(doc["monogamy"][0]["monogamous"].get<bool>());
}

TEST(AnalyzeReport, BalancedW) {
    const json doc = analyze_report(w(WParams::balanced()));
    EXPECT_NEAR(doc["tangle"]["tau_ABC"].get<double>(), -0.546, 0.005);
    EXPECT_FALSE(doc.contains("ghz_family"));
    for (const json& m : doc["monogamy"]) {
        EXPECT_FALSE(m["monogamous"].get<bool>());
        EXPECT_TRUE(m["sign_agrees"].get<bool>());
    }
    EXPECT_NEAR(doc["eof"]["AB"].get<double>(), binary_entropy((1 + std::sqrt(5.0) / 3) / 2), 1e-10);
    EXPECT_LE(doc["checks"]["flow_L_gap"].get<double>(), 5e-4);
}

TEST(AnalyzeReport, ProductStateIsAllZero) {
    const json doc = analyze_report(basis_state({2, 2, 2}, {0, 0, 0}));
    for (const json& p : doc["pairs"]) {
        EXPECT_NEAR(p["discord"].get<double>(), 0.0, 1e-12);
        EXPECT_NEAR(p["classical"].get<double>(), 0.0, 1e-12);
        EXPECT_NEAR(p["mutual_info"].get<double>(), 0.0, 1e-12);
    }
    EXPECT_NEAR(doc["tangle"]["tau_ABC"].get<double>(), 0.0, 1e-12);
    for (const auto& [key, value] : doc["eof"].items()) {
        EXPECT_NEAR(value.get<double>(), 0.0, 1e-12) << key;
    }
}

TEST(AnalyzeReport, ShortcutRouteMarksDerivedPairs) {
    const json doc = analyze_report(purified_tripartite(7.0, {}));
    EXPECT_EQ(doc["route"], "shortcut_22N");
    EXPECT_EQ(doc["dims"], json::array({2, 2, 4}));
    int optimized = 0;
    for (const json& p : doc["pairs"]) {
        optimized += p["source"] == "optimized" ? 1 : 0;
    }
    EXPECT_EQ(optimized, 2);
    EXPECT_TRUE(doc["concurrence_tangle"].is_null());
}

TEST(AnalyzeReport, CarriesVersionAndTolerances) {
    const json doc = analyze_report(haar_random({2, 2, 2}, 1));
    EXPECT_EQ(doc["version"], version());
    EXPECT_TRUE(doc["tolerances"].contains("monogamy_tie"));
    EXPECT_EQ(doc["tolerances"]["optimizer"]["grid_theta"], 31);
}

TEST(FormatReal, RoundTripsDoubles) {
    for (double x : {0.1, 1.0 / 3, -2.5e-17, 6.02214076e23}) {
        EXPECT_EQ(std::stod(format_real(x)), x);
    }
}

TEST(CsvWriters, HeadersAndRows) {
    std::ostringstream ws;
    write_w_csv(ws, scan_w(2, 2));
    std::istringstream in(ws.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "theta,phi,tau_abc,tau_a,tau_b,tau_c");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 4);

    std::ostringstream gs;
    write_ghz_csv(gs, scan_ghz(2, 2));
    EXPECT_EQ(gs.str().substr(0, gs.str().find('\n')), "theta,phi,tau_abc,tau_a,tau_b,tau_c,max_discord");

    std::ostringstream ds;
    const std::vector<double> times{0.0, 1.0};
    write_dynamics_csv(ds, scan({}, times));
    EXPECT_EQ(ds.str().substr(0, ds.str().find('\n')),
              "time,G,E_AB,delta_AB,delta_BA,J_AB,J_BA,tau_A,tau_B,tau_C,tau_ABC,concurrence");
}

} // namespace
} // namespace eoft
