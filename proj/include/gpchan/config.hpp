// Copyright 2026 The gpchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Scenario configuration files: flat `dotted.key = value` lines, `#` starts a
// comment. Angles are radians unless the caller asks for degrees.
//
//   scenario.attack_present    = true | false
//   scenario.rotation_axis     = x, y, z
//   scenario.adversary         = none | fixed_compensator | basis_aware
//   scenario.compensator_theta = <angle>
//   scenario.theta_grid        = <angle>, <angle>, ...
//   scenario.alice_basis       = circular | linear
//   scenario.alice_alpha       = <angle>
//   scenario.pairs_per_setting = <count>
//   scenario.seed              = <uint64>
//   test.significance          = <probability>
//   device.delta_ab            = <seconds>
//   device.delta_ba            = <seconds>
//   run.threads                = <count>

#include <cstdint>
#include <string>
#include <string_view>

#include "gpchan/detect.hpp"

namespace gpchan {

struct RunConfig {
    Scenario scenario;
    double significance = kDefaultSignificance;
    double delta_ab = 0.0;
    double delta_ba = 0.0;
    unsigned threads = 1;

    [[nodiscard]] AttackDevice device() const { return {scenario.rotation_axis, delta_ab, delta_ba}; }
    bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError with the offending line number.
RunConfig parse_config(std::string_view text, bool angles_in_degrees = false);

/// Throws IoError if the file cannot be read, ConfigError if it does not parse.
RunConfig load_config(const std::string& path, bool angles_in_degrees = false);

}  // namespace gpchan
