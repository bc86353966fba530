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

#include "gpchan/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "gpchan/bell.hpp"
#include "gpchan/channel.hpp"

#ifndef GPCHAN_VERSION
#define GPCHAN_VERSION "0.0.0"
#endif

namespace gpchan {

using nlohmann::json;

std::string tool_version() { return GPCHAN_VERSION; }

std::string format_fixed(double value, int decimals) {
    value += 0.0;  // -0 prints as 0
    char buf[512];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    if (ec != std::errc()) {
        throw std::invalid_argument("value cannot be formatted in fixed notation");
    }
    return {buf, ptr};
}

std::string format_fixed_sig9(double value) {
    constexpr int kMaxDecimals = 12;
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot format a non-finite value");
    }
    int decimals = 8;
    if (value != 0.0) {
        const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
        decimals = std::clamp(8 - exponent, 0, kMaxDecimals);
    }
    return format_fixed(value, decimals);
}

std::vector<Fig3Row> fig3_rows(std::size_t points) {
    if (points < 2) {
        throw std::invalid_argument("fig3 needs at least 2 points");
    }
    const AttackDevice device;
    const MeasurementBasis alice = circular_basis();
    const TwoQubitState pair = phi_minus();
    std::vector<Fig3Row> rows;
    rows.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double theta =
            i + 1 == points ? kPi : kPi * static_cast<double>(i) / static_cast<double>(points - 1);
        const JointSetting setting{alice, bob_basis(theta)};
        const TwoQubitState attacked = apply_to_bob(pair, attack_operator(device, theta));
        rows.push_back({theta, joint_prob(attacked, setting, {Sign::Plus, Sign::Plus}),
                        joint_prob(attacked, setting, {Sign::Plus, Sign::Minus}),
                        joint_prob(pair, setting, {Sign::Plus, Sign::Plus}),
                        joint_prob(pair, setting, {Sign::Plus, Sign::Minus})});
    }
    return rows;
}

void write_fig3_csv(std::ostream& out, const std::vector<Fig3Row>& rows) {
    out << kFig3Header << '\n';
    for (const auto& r : rows) {
        out << format_fixed_sig9(r.theta_rad) << ',' << format_fixed_sig9(r.p_theta_attack) << ','
            << format_fixed_sig9(r.p_theta_perp_attack) << ',' << format_fixed_sig9(r.p_theta_null) << ','
            << format_fixed_sig9(r.p_theta_perp_null) << '\n';
    }
}

std::vector<ReferencePoint> reference_curves(const Scenario& scenario) {
    std::vector<ReferencePoint> out;
    out.reserve(scenario.theta_grid.size());
    for (double theta : scenario.theta_grid) {
        ReferencePoint p;
        p.theta = theta;
        p.beta = attack_beta(theta);
        if (scenario.alice.kind == AliceBasisChoice::Kind::Circular) {
            p.p_plus_plus_null = closed_form_circular(theta, 0.0, false);
            p.p_plus_minus_null = closed_form_circular(theta, 0.0, true);
            p.p_plus_plus_attack = closed_form_circular(theta, p.beta, false);
            p.p_plus_minus_attack = closed_form_circular(theta, p.beta, true);
        } else {
            // Alice's marginal is 1/2, so the (+,-) cell is the complement.
            p.p_plus_plus_null = closed_form_general(scenario.alice.alpha, theta, 0.0);
            p.p_plus_minus_null = clamp_probability(0.5 - p.p_plus_plus_null);
            p.p_plus_plus_attack = closed_form_general(scenario.alice.alpha, theta, p.beta);
            p.p_plus_minus_attack = clamp_probability(0.5 - p.p_plus_plus_attack);
        }
        out.push_back(p);
    }
    return out;
}

bool operator==(const RunReport& a, const RunReport& b) {
    return a.tool_version == b.tool_version && a.seed == b.seed && a.config == b.config && a.tallies == b.tallies &&
           a.verdict == b.verdict && a.reference == b.reference && a.timestamp == b.timestamp;
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string adversary_name(AdversaryKind k) {
    switch (k) {
        case AdversaryKind::None:
            return "none";
        case AdversaryKind::FixedCompensator:
            return "fixed_compensator";
        case AdversaryKind::BasisAware:
            return "basis_aware";
    }
    return "none";
}

AdversaryKind adversary_from_name(const std::string& s) {
    if (s == "none") return AdversaryKind::None;
    if (s == "fixed_compensator") return AdversaryKind::FixedCompensator;
    if (s == "basis_aware") return AdversaryKind::BasisAware;
    throw std::invalid_argument("unknown adversary '" + s + "'");
}

json nullable(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double from_nullable(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

constexpr const char* kCellNames[4] = {"++", "+-", "-+", "--"};

}  // namespace

RunReport run_scenario(const RunConfig& config, bool with_timestamp) {
    RunReport report;
    report.tool_version = tool_version();
    report.seed = config.scenario.seed;
    report.config = config;
    report.tallies = simulate(config.scenario, {config.threads, kernels::active_isa()});
    report.verdict = reciprocity_test(report.tallies, config.significance);
    report.reference = reference_curves(config.scenario);
    if (with_timestamp) report.timestamp = utc_timestamp();
    return report;
}

json report_to_json(const RunReport& r) {
    const Scenario& sc = r.config.scenario;
    json j;
    j["tool"] = {{"name", "gpchan"}, {"version", r.tool_version}};
    j["seed"] = r.seed;
    j["scenario"] = {
        {"attack_present", sc.attack_present},
        {"rotation_axis", {sc.rotation_axis.x, sc.rotation_axis.y, sc.rotation_axis.z}},
        {"adversary", {{"kind", adversary_name(sc.adversary.kind)}, {"theta0", sc.adversary.theta0}}},
        {"theta_grid", sc.theta_grid},
        {"alice_basis",
         {{"kind", sc.alice.kind == AliceBasisChoice::Kind::Circular ? "circular" : "linear"},
          {"alpha", sc.alice.alpha}}},
        {"pairs_per_setting", sc.pairs_per_setting},
        {"seed", sc.seed},
    };
    j["run"] = {
        {"significance", r.config.significance},
        {"threads", r.config.threads},
        {"device",
         {{"delta_ab", r.config.delta_ab},
          {"delta_ba", r.config.delta_ba},
          {"asymmetry", delay_asymmetry(r.config.device())}}},
    };
    json tallies = json::array();
    for (std::size_t row = 0; row < r.tallies.counts.size(); ++row) {
        json counts;
        for (std::size_t k = 0; k < 4; ++k) counts[kCellNames[k]] = r.tallies.counts[row][k];
        tallies.push_back({{"theta", r.tallies.theta_grid[row]}, {"counts", counts}});
    }
    j["tallies"] = tallies;
    j["verdict"] = {
        {"chi_square", nullable(r.verdict.chi_square)},
        {"degrees_of_freedom", r.verdict.degrees_of_freedom},
        {"p_value", r.verdict.p_value},
        {"significance", r.verdict.significance},
        {"non_reciprocal", r.verdict.non_reciprocal},
        {"contrast_estimates", r.verdict.contrast_estimates},
    };
    json reference = json::array();
    for (const auto& p : r.reference) {
        reference.push_back({{"theta", p.theta},
                             {"beta", p.beta},
                             {"p_plus_plus_null", p.p_plus_plus_null},
                             {"p_plus_minus_null", p.p_plus_minus_null},
                             {"p_plus_plus_attack", p.p_plus_plus_attack},
                             {"p_plus_minus_attack", p.p_plus_minus_attack}});
    }
    j["reference"] = reference;
    if (r.timestamp) j["timestamp"] = *r.timestamp;
    return j;
}

RunReport report_from_json(const json& j) {
    try {
        RunReport r;
        r.tool_version = j.at("tool").at("version").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();

        const json& s = j.at("scenario");
        Scenario& sc = r.config.scenario;
        sc.attack_present = s.at("attack_present").get<bool>();
        const auto axis = s.at("rotation_axis").get<std::vector<double>>();
        if (axis.size() != 3) throw std::invalid_argument("rotation_axis needs three components");
        sc.rotation_axis = {axis[0], axis[1], axis[2]};
        sc.adversary.kind = adversary_from_name(s.at("adversary").at("kind").get<std::string>());
        sc.adversary.theta0 = s.at("adversary").at("theta0").get<double>();
        sc.theta_grid = s.at("theta_grid").get<std::vector<double>>();
        const auto kind = s.at("alice_basis").at("kind").get<std::string>();
        if (kind != "circular" && kind != "linear") throw std::invalid_argument("unknown alice_basis kind");
        sc.alice.kind = kind == "circular" ? AliceBasisChoice::Kind::Circular : AliceBasisChoice::Kind::Linear;
        sc.alice.alpha = s.at("alice_basis").at("alpha").get<double>();
        sc.pairs_per_setting = s.at("pairs_per_setting").get<std::uint64_t>();
        sc.seed = s.at("seed").get<std::uint64_t>();

        const json& run = j.at("run");
        r.config.significance = run.at("significance").get<double>();
        r.config.threads = run.at("threads").get<unsigned>();
        r.config.delta_ab = run.at("device").at("delta_ab").get<double>();
        r.config.delta_ba = run.at("device").at("delta_ba").get<double>();

        r.tallies.alice = sc.alice;
        for (const auto& row : j.at("tallies")) {
            r.tallies.theta_grid.push_back(row.at("theta").get<double>());
            kernels::CellCounts c{};
            for (std::size_t k = 0; k < 4; ++k) c[k] = row.at("counts").at(kCellNames[k]).get<std::uint64_t>();
            r.tallies.counts.push_back(c);
        }

        const json& v = j.at("verdict");
        r.verdict.chi_square = from_nullable(v.at("chi_square"));
        r.verdict.degrees_of_freedom = v.at("degrees_of_freedom").get<unsigned>();
        r.verdict.p_value = v.at("p_value").get<double>();
        r.verdict.significance = v.at("significance").get<double>();
        r.verdict.non_reciprocal = v.at("non_reciprocal").get<bool>();
        r.verdict.contrast_estimates = v.at("contrast_estimates").get<std::vector<double>>();

        for (const auto& p : j.at("reference")) {
            r.reference.push_back({p.at("theta").get<double>(), p.at("beta").get<double>(),
                                   p.at("p_plus_plus_null").get<double>(), p.at("p_plus_minus_null").get<double>(),
                                   p.at("p_plus_plus_attack").get<double>(),
                                   p.at("p_plus_minus_attack").get<double>()});
        }
        if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::string serialize_report(const RunReport& report) { return report_to_json(report).dump(2) + "\n"; }

}  // namespace gpchan
