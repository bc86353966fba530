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

#include "gpchan/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "gpchan/errors.hpp"

namespace gpchan {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class LineError {
public:
    explicit LineError(std::size_t line) : line_(line) {}
    [[noreturn]] void raise(const std::string& what) const {
        throw ConfigError("line " + std::to_string(line_) + ": " + what);
    }

private:
    std::size_t line_;
};

double parse_double(std::string_view s, const LineError& err) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        err.raise("not a number: '" + std::string(s) + "'");
    }
    return v;
}

std::uint64_t parse_uint(std::string_view s, const LineError& err) {
    s = trim(s);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        err.raise("not a non-negative integer: '" + std::string(s) + "'");
    }
    return v;
}

bool parse_bool(std::string_view s, const LineError& err) {
    s = trim(s);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    err.raise("not a boolean: '" + std::string(s) + "'");
}

std::vector<double> parse_list(std::string_view s, const LineError& err) {
    std::vector<double> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        out.push_back(parse_double(s.substr(0, comma), err));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

RunConfig parse_config(std::string_view text, bool angles_in_degrees) {
    const double angle_scale = angles_in_degrees ? kPi / 180.0 : 1.0;
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const LineError err(line_no);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) err.raise("expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) err.raise("duplicate key '" + key + "'");

        Scenario& sc = cfg.scenario;
        if (key == "scenario.attack_present") {
            sc.attack_present = parse_bool(value, err);
        } else if (key == "scenario.rotation_axis") {
            const auto v = parse_list(value, err);
            if (v.size() != 3) err.raise("rotation_axis needs three components");
            const BlochVector axis{v[0], v[1], v[2]};
            if (axis.norm() == 0.0) err.raise("rotation_axis is the zero vector");
            sc.rotation_axis = axis.normalized();
        } else if (key == "scenario.adversary") {
            if (value == "none") {
                sc.adversary.kind = AdversaryKind::None;
            } else if (value == "fixed_compensator") {
                sc.adversary.kind = AdversaryKind::FixedCompensator;
            } else if (value == "basis_aware") {
                sc.adversary.kind = AdversaryKind::BasisAware;
            } else {
                err.raise("unknown adversary '" + std::string(value) + "'");
            }
        } else if (key == "scenario.compensator_theta") {
            sc.adversary.theta0 = parse_double(value, err) * angle_scale;
        } else if (key == "scenario.theta_grid") {
            sc.theta_grid = parse_list(value, err);
            for (double& t : sc.theta_grid) t *= angle_scale;
        } else if (key == "scenario.alice_basis") {
            if (value == "circular") {
                sc.alice.kind = AliceBasisChoice::Kind::Circular;
            } else if (value == "linear") {
                sc.alice.kind = AliceBasisChoice::Kind::Linear;
            } else {
                err.raise("alice_basis must be 'circular' or 'linear'");
            }
        } else if (key == "scenario.alice_alpha") {
            sc.alice.alpha = parse_double(value, err) * angle_scale;
        } else if (key == "scenario.pairs_per_setting") {
            sc.pairs_per_setting = parse_uint(value, err);
        } else if (key == "scenario.seed") {
            sc.seed = parse_uint(value, err);
        } else if (key == "test.significance") {
            cfg.significance = parse_double(value, err);
        } else if (key == "device.delta_ab") {
            cfg.delta_ab = parse_double(value, err);
        } else if (key == "device.delta_ba") {
            cfg.delta_ba = parse_double(value, err);
        } else if (key == "run.threads") {
            const auto t = parse_uint(value, err);
            if (t < 1 || t > 1024) err.raise("run.threads must be in [1, 1024]");
            cfg.threads = static_cast<unsigned>(t);
        } else {
            err.raise("unknown key '" + key + "'");
        }
    }

    if (!seen.contains("scenario.theta_grid")) {
        throw ConfigError("missing required key 'scenario.theta_grid'");
    }
    try {
        cfg.scenario.validate();
        cfg.device().validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (!(cfg.significance > 0.0 && cfg.significance < 1.0)) {
        throw ConfigError("test.significance must lie in (0, 1)");
    }
    return cfg;
}

RunConfig load_config(const std::string& path, bool angles_in_degrees) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading config file '" + path + "'");
    }
    return parse_config(buf.str(), angles_in_degrees);
}

}  // namespace gpchan
