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

#ifndef LAYERHEAT_CONFIG_HPP_
#define LAYERHEAT_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "layerheat/heat_solver.hpp"

namespace layerheat {

// One parse or validation diagnostic.  `line` is 1-based; 0 marks a
// document-level problem with no single originating line.
struct ConfigError {
    int line = 0;
    std::string message;
};

// Finite-difference oracle controls for the compare subcommand.
struct OracleConfig {
    double h = 1.0 / 64.0;
    double dt = 1e-3;
    double x_lo = -7.0;
    double x_hi = 7.0;
    double y_lo = -6.0;
    double y_hi = 6.0;
    double tolerance = 1e-2;
};

// A fully translated scenario document.
struct ScenarioConfig {
    HeatScenario scenario;
    OracleConfig oracle;
    std::string output_name = "solution.csv";
    // FNV-1a hash of the raw document text, for output headers.
    std::uint64_t hash = 0;
};

struct ParseResult {
    bool ok = false;
    ScenarioConfig config;
    std::vector<ConfigError> errors;
};

// Parses a scenario document (TOML-style key/value text; see README for
// the grammar).  Total: malformed input yields diagnostics, never an
// exception.  On success the embedded scenario already passed
// validate_scenario.
ParseResult parse_config(const std::string& text);

// 64-bit FNV-1a hash of the raw bytes.
std::uint64_t config_hash(const std::string& text);

// "line N: message" or "config: message" for document-level errors.
std::string format_error(const ConfigError& error);

}  // namespace layerheat

#endif  // LAYERHEAT_CONFIG_HPP_
