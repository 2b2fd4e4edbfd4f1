// lifi-uplink: physical layer evaluation toolkit for infrared LiFi uplinks
// Copyright (C) 2025-2026 the lifi-uplink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LIFI_COMMANDS_HPP
#define LIFI_COMMANDS_HPP

#include "lifi/config.hpp"
#include "lifi/network_stats.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lifi
{

// One fully resolved command: everything the CLI parsed, with the
// configuration already merged and validated. Kept separate from the CLI so
// tests can drive commands in-process and compare CSV output byte for byte.
struct CommandRequest
{
    std::string verb; // pathloss-cdf | pathloss-pdf | factor-cdf | factor-pdf |
                      // rate-curve | avg-rate | simulate | validate
    Config cfg;
    RateMode rate_mode = RateMode::adaptive;
    std::string what = "pathloss"; // simulate: pathloss | factor
    std::string suite = "all";     // validate: all | theorem1 | corollary | pdf |
                                   // network | modulation | determinism
    std::vector<double> lambda_grid = {0.1, 0.25, 0.5, 1.0}; // avg-rate sweep
};

// Execute one command. CSV rows (or validate report lines) go to `out`,
// progress notes to `diag`. Returns the process exit code: 0 on success,
// 2 when a validate suite fails.
int run_command(const CommandRequest& req, std::ostream& out, std::ostream& diag);

} // namespace lifi

#endif // LIFI_COMMANDS_HPP
