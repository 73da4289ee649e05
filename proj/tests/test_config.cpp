// Copyright 2026 layerheat authors.
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

#include <string>
#include <vector>

#include "doctest.h"
#include "layerheat/config.hpp"
#include "layerheat/media.hpp"

namespace {

using layerheat::ConfigError;
using layerheat::ParseResult;
using layerheat::parse_config;

bool mentions(const std::vector<ConfigError>& errors,
              const std::string& needle) {
    for (const ConfigError& e : errors) {
        if (e.message.find(needle) != std::string::npos) return true;
    }
    return false;
}

const char* kMinimal = R"(
transverse_dim = 1
layers = [{a = 1.0}]
interfaces = []
times = [0.1]

[[bumps]]
layer = 1
amplitude = 1.0
center_x = 0.0
sigma_x = 0.5
center_y = [0.0]
sigma_y = [0.5]

[[probes]]
x = 0.25
y = [0.0]
)";

}  // namespace

TEST_CASE("minimal homogeneous document parses to a valid scenario") {
    ParseResult r = parse_config(kMinimal);
    CAPTURE(r.errors.empty() ? "" : r.errors.front().message);
    REQUIRE(r.ok);
    CHECK(r.config.scenario.medium.layer_count() == 1);
    CHECK(r.config.scenario.medium.transverse_dim == 1);
    CHECK(r.config.scenario.medium.a(1) == 1.0);
    CHECK(r.config.scenario.times == std::vector<double>{0.1});
    REQUIRE(r.config.scenario.probes.size() == 1);
    CHECK(r.config.scenario.probes[0].x == 0.25);
    REQUIRE(r.config.scenario.bumps.size() == 1);
    CHECK(r.config.scenario.bumps[0].sigma_x == 0.5);
    CHECK(r.config.scenario.initial.pieces.size() == 1);
    CHECK(r.config.output_name == "solution.csv");
    CHECK(r.config.hash != 0);
}

TEST_CASE("two-layer document with ideal coupling and grid probes") {
    const char* text = R"(
transverse_dim = 2
layers = [{a = 1.0}, {a = 1.5}]
interfaces = [0.0]
coupling = {type = "ideal", nu = 1.25}
times = [0.05, 0.1]

[[bumps]]
layer = 2
amplitude = 0.7
center_x = 2.0
sigma_x = 0.45
center_y = [0.1, -0.2]
sigma_y = [0.6, 0.5]

[probe_grid]
x = [-1.2, 0.8, 5]
y = [-0.5, 0.5, 3]

[weights]
mode = "literal"

[quadrature]
finite_nodes = 48
rho_nodes = 160

[oracle]
h = 0.03125
tolerance = 0.02

[output]
solution = "run.csv"
)";
    ParseResult r = parse_config(text);
    CAPTURE(r.errors.empty() ? "" : r.errors.front().message);
    REQUIRE(r.ok);
    const layerheat::HeatScenario& sc = r.config.scenario;
    CHECK(sc.medium.layer_count() == 2);
    CHECK(sc.medium.transverse_dim == 2);
    CHECK(sc.coupling.at.size() == 1);
    CHECK(sc.coupling.at[0].alpha[1][1] == 1.25);
    REQUIRE(sc.probes.size() == 15);
    CHECK(sc.probes[0].x == -1.2);
    CHECK(sc.probes[0].y == std::vector<double>{-0.5, 0.0});
    CHECK(sc.probes[14].x == 0.8);
    CHECK(sc.probes[14].y == std::vector<double>{0.5, 0.0});
    CHECK(sc.mode.name() == "literal");
    CHECK(sc.spec.finite_nodes == 48);
    CHECK(sc.spec.rho_nodes == 160);
    CHECK(r.config.oracle.h == 0.03125);
    CHECK(r.config.oracle.tolerance == 0.02);
    CHECK(r.config.output_name == "run.csv");
}

TEST_CASE("explicit coupling_conditions blocks build the coupling rows") {
    const char* text = R"(
layers = [{a = 1.0}, {a = 1.5}]
interfaces = [0.0]

[[coupling_conditions]]
alpha = [[0.0, 0.0], [1.0, 1.25]]
beta = [[1.0, 1.0], [0.0, 0.0]]
)";
    ParseResult r = parse_config(text);
    CAPTURE(r.errors.empty() ? "" : r.errors.front().message);
    REQUIRE(r.ok);
    layerheat::TwoLayerIdealParams params;
    CHECK(layerheat::is_two_layer_ideal(r.config.scenario.medium,
                                        r.config.scenario.coupling,
                                        &params));
    CHECK(params.nu == doctest::Approx(1.25));
}

TEST_CASE("missing nu under ideal coupling names the field") {
    const char* text = R"(
layers = [{a = 1.0}, {a = 1.5}]
interfaces = [0.0]
coupling = {type = "ideal"}
)";
    ParseResult r = parse_config(text);
    CHECK_FALSE(r.ok);
    CHECK(mentions(r.errors, "nu"));
}

TEST_CASE("interfaces out of order trip medium validation") {
    const char* text = R"(
layers = [{a = 1.0}, {a = 1.5}, {a = 2.0}]
interfaces = [1.0, -1.0]
coupling = {type = "ideal", nu = 2.0}
)";
    ParseResult r = parse_config(text);
    CHECK_FALSE(r.ok);
    CHECK(mentions(r.errors, "increasing"));
}

TEST_CASE("parse errors carry line numbers and do not throw") {
    const char* text =
        "layers = [{a = 1.0}]\n"
        "interfaces = ]broken\n"
        "times = [0.1]\n";
    ParseResult r = parse_config(text);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.errors.empty());
    CHECK(r.errors.front().line == 2);
    CHECK(layerheat::format_error(r.errors.front()).rfind("line 2:", 0) ==
          0);
}

TEST_CASE("unknown keys are itemized with their lines") {
    const char* text =
        "layers = [{a = 1.0}]\n"
        "interfaces = []\n"
        "speling_mistake = 1\n";
    ParseResult r = parse_config(text);
    CHECK_FALSE(r.ok);
    CHECK(mentions(r.errors, "speling_mistake"));
}

TEST_CASE("malformed numbers and strings are reported, never thrown") {
    ParseResult bad_number = parse_config("layers = [{a = 1.0.0}]\n");
    CHECK_FALSE(bad_number.ok);
    ParseResult bad_string =
        parse_config("layers = [{a = 1.0}]\n[output]\nsolution = \"x\n");
    CHECK_FALSE(bad_string.ok);
    CHECK(mentions(bad_string.errors, "unterminated"));
    ParseResult bad_section = parse_config("[weights\nmode = \"literal\"\n");
    CHECK_FALSE(bad_section.ok);
    CHECK(mentions(bad_section.errors, "section"));
    ParseResult empty = parse_config("");
    CHECK_FALSE(empty.ok);
    CHECK(mentions(empty.errors, "layers"));
}

TEST_CASE("duplicate keys and sections are rejected") {
    ParseResult dup_key =
        parse_config("layers = [{a = 1.0}]\nlayers = [{a = 2.0}]\n");
    CHECK_FALSE(dup_key.ok);
    CHECK(mentions(dup_key.errors, "duplicate key"));
    ParseResult dup_section = parse_config(
        "layers = [{a = 1.0}]\n[weights]\n[weights]\n");
    CHECK_FALSE(dup_section.ok);
    CHECK(mentions(dup_section.errors, "duplicate section"));
}

TEST_CASE("probes must match the transverse dimension") {
    const char* text = R"(
transverse_dim = 2
layers = [{a = 1.0}]
interfaces = []

[[probes]]
x = 0.0
y = [0.1]
)";
    ParseResult r = parse_config(text);
    CHECK_FALSE(r.ok);
    CHECK(mentions(r.errors, "dimension"));
}

TEST_CASE("bump transverse vectors default to the document dimension") {
    const char* text = R"(
transverse_dim = 2
layers = [{a = 1.0}]
interfaces = []

[[bumps]]
amplitude = 2.0
sigma_x = 0.4
)";
    ParseResult r = parse_config(text);
    CAPTURE(r.errors.empty() ? "" : r.errors.front().message);
    REQUIRE(r.ok);
    REQUIRE(r.config.scenario.bumps.size() == 1);
    CHECK(r.config.scenario.bumps[0].center_y ==
          std::vector<double>{0.0, 0.0});
    CHECK(r.config.scenario.bumps[0].sigma_y ==
          std::vector<double>{1.0, 1.0});
}

TEST_CASE("quadrature validation failures surface as diagnostics") {
    const char* text = R"(
layers = [{a = 1.0}]
interfaces = []

[quadrature]
rho_nodes = -5
)";
    ParseResult r = parse_config(text);
    CHECK_FALSE(r.ok);
    CHECK(mentions(r.errors, "quadrature"));
}

TEST_CASE("config hash is deterministic and content-sensitive") {
    const std::string text = kMinimal;
    CHECK(layerheat::config_hash(text) == layerheat::config_hash(text));
    CHECK(layerheat::config_hash(text) !=
          layerheat::config_hash(text + " "));
    ParseResult r = parse_config(text);
    REQUIRE(r.ok);
    CHECK(r.config.hash == layerheat::config_hash(text));
}

TEST_CASE("comments, blank lines, and multiline arrays are accepted") {
    const char* text = R"(
# leading comment
layers = [{a = 1.0}]   # trailing comment
interfaces = []

times = [
    0.05,  # first
    0.1,
]
)";
    ParseResult r = parse_config(text);
    CAPTURE(r.errors.empty() ? "" : r.errors.front().message);
    REQUIRE(r.ok);
    CHECK(r.config.scenario.times == std::vector<double>{0.05, 0.1});
}
