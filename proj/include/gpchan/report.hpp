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

// Machine-readable outputs: the figure-data CSV and the JSON run report.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpchan/config.hpp"
#include "gpchan/detect.hpp"

namespace gpchan {

std::string tool_version();

/// Fixed (never scientific) notation with 9 significant digits, independent
/// of the global locale. At most 12 decimals are printed, so magnitudes below
/// 5e-13 (rounding residue of exact zeros) come out as 0.000000000000.
std::string format_fixed_sig9(double value);

/// Fixed notation with `decimals` digits after the point, locale independent.
std::string format_fixed(double value, int decimals);

struct Fig3Row {
    double theta_rad;
    double p_theta_attack;
    double p_theta_perp_attack;
    double p_theta_null;
    double p_theta_perp_null;
};

/// Probabilities of |R>|theta> and |R>|theta_perp> on `points` evenly spaced
/// theta in [0, pi]. Attack columns go through the amplitude pipeline with the
/// default device; null columns use the untouched pair. Throws
/// std::invalid_argument for points < 2.
std::vector<Fig3Row> fig3_rows(std::size_t points);

inline constexpr const char* kFig3Header =
    "theta_rad,p_theta_attack,p_theta_perp_attack,p_theta_null,p_theta_perp_null";

/// Header plus one line per row, LF endings.
void write_fig3_csv(std::ostream& out, const std::vector<Fig3Row>& rows);

/// Closed-form reference values at one grid point: no adversary, R/L device
/// axis.
struct ReferencePoint {
    double theta = 0.0;
    double beta = 0.0;
    double p_plus_plus_null = 0.0;
    double p_plus_minus_null = 0.0;
    double p_plus_plus_attack = 0.0;
    double p_plus_minus_attack = 0.0;

    bool operator==(const ReferencePoint&) const = default;
};

std::vector<ReferencePoint> reference_curves(const Scenario& scenario);

struct RunReport {
    std::string tool_version;
    std::uint64_t seed = 0;
    RunConfig config;
    TallyTable tallies;
    DetectionVerdict verdict;
    std::vector<ReferencePoint> reference;
    std::optional<std::string> timestamp;
};

bool operator==(const RunReport& a, const RunReport& b);

/// Runs simulate + reciprocity_test for `config`.
RunReport run_scenario(const RunConfig& config, bool with_timestamp);

nlohmann::json report_to_json(const RunReport& report);
/// Throws std::invalid_argument on malformed input.
RunReport report_from_json(const nlohmann::json& j);

/// Pretty-printed JSON document with a trailing newline.
std::string serialize_report(const RunReport& report);

}  // namespace gpchan
