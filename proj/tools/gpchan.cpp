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

// gpchan: geometric-phase channel toolkit.
//
//   gpchan phase --theta T [--segments N] [--method discrete|solid-angle|closed-form]
//   gpchan fig3 [--points N] [--out FILE]
//   gpchan simulate --config FILE [--out FILE] [--seed S] [--significance A]
//                   [--threads N] [--no-timestamp]
//
// Exit codes: 0 success, 2 usage or config error, 3 I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gpchan/errors.hpp"
#include "gpchan/geophase.hpp"
#include "gpchan/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct GlobalFlags {
    std::optional<std::uint64_t> seed;
    std::optional<double> significance;
    std::string out;
    bool degrees = false;
};

struct PhaseArgs {
    double theta = 0.0;
    std::size_t segments = 10000;
    std::string method = "closed-form";
};

struct Fig3Args {
    std::size_t points = 181;
};

struct SimulateArgs {
    std::string config;
    std::optional<unsigned> threads;
    bool no_timestamp = false;
};

// Writes to `path`, or stdout when empty. Throws gpchan::IoError.
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw gpchan::IoError("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw gpchan::IoError("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw gpchan::IoError("failed writing '" + path + "'");
}

int cmd_phase(const PhaseArgs& args, const GlobalFlags& flags) {
    using namespace gpchan;
    const double theta = flags.degrees ? args.theta * kPi / 180.0 : args.theta;
    double beta = 0.0;
    double beta_unwrapped = 0.0;
    double omega = 0.0;
    if (args.method == "closed-form") {
        beta_unwrapped = attack_beta(theta);
        beta = wrap_phase(beta_unwrapped);
        omega = -2.0 * beta_unwrapped;
    } else if (args.method == "discrete") {
        if (args.segments < 3) {
            std::cerr << "error: --segments must be at least 3\n";
            return kExitUsage;
        }
        const GeometricPhase g = geometric_phase_discrete(latitude_circle(theta, args.segments));
        beta = g.wrapped;
        beta_unwrapped = g.unwrapped;
        omega = std::fmod(-2.0 * beta + 4.0 * kPi, 4.0 * kPi);
    } else if (args.method == "solid-angle") {
        if (args.segments < 3) {
            std::cerr << "error: --segments must be at least 3\n";
            return kExitUsage;
        }
        try {
            omega = solid_angle(latitude_circle(theta, args.segments));
        } catch (const DegeneratePolygon&) {
            omega = 0.0;  // the loop has collapsed onto a point
        }
        // Report the cap on the left of travel, as the other methods do.
        if (omega < 0.0) omega += 4.0 * kPi;
        beta_unwrapped = -0.5 * omega;
        beta = wrap_phase(beta_unwrapped);
    } else {
        std::cerr << "error: unknown method '" << args.method << "'\n";
        return kExitUsage;
    }
    std::ostringstream out;
    out << "method = " << args.method << '\n'
        << "theta = " << format_fixed(theta, 10) << '\n'
        << "beta = " << format_fixed(beta, 10) << '\n'
        << "beta_unwrapped = " << format_fixed(beta_unwrapped, 10) << '\n'
        << "omega = " << format_fixed(omega, 10) << '\n';
    emit(flags.out, out.str());
    return kExitOk;
}

int cmd_fig3(const Fig3Args& args, const GlobalFlags& flags) {
    if (args.points < 2) {
        std::cerr << "error: --points must be at least 2\n";
        return kExitUsage;
    }
    std::ostringstream out;
    gpchan::write_fig3_csv(out, gpchan::fig3_rows(args.points));
    emit(flags.out, out.str());
    return kExitOk;
}

int cmd_simulate(const SimulateArgs& args, const GlobalFlags& flags) {
    gpchan::RunConfig config = gpchan::load_config(args.config, flags.degrees);
    if (flags.seed) config.scenario.seed = *flags.seed;
    if (flags.significance) {
        if (!(*flags.significance > 0.0 && *flags.significance < 1.0)) {
            throw gpchan::ConfigError("--significance must lie in (0, 1)");
        }
        config.significance = *flags.significance;
    }
    if (args.threads) {
        if (*args.threads < 1) throw gpchan::ConfigError("--threads must be at least 1");
        config.threads = *args.threads;
    }
    const gpchan::RunReport report = gpchan::run_scenario(config, !args.no_timestamp);
    emit(flags.out, gpchan::serialize_report(report));
    std::cerr << "non_reciprocal = " << (report.verdict.non_reciprocal ? "true" : "false")
              << "  p_value = " << report.verdict.p_value << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric-phase detection of optical channel non-reciprocity"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", gpchan::tool_version());

    GlobalFlags flags;
    app.add_option("--seed", flags.seed, "Override the scenario seed");
    app.add_option("--significance", flags.significance, "Test significance level");
    app.add_option("--out", flags.out, "Output file (default: stdout)");
    app.add_flag("--degrees", flags.degrees, "Read input angles as degrees");

    PhaseArgs phase;
    auto* phase_cmd = app.add_subcommand("phase", "Geometric phase of a latitude loop");
    phase_cmd->add_option("--theta", phase.theta, "Colatitude of the loop")->required();
    phase_cmd->add_option("--segments", phase.segments, "Segments for discrete / solid-angle methods");
    phase_cmd->add_option("--method", phase.method, "discrete | solid-angle | closed-form")
        ->check(CLI::IsMember({"discrete", "solid-angle", "closed-form"}));

    Fig3Args fig3;
    auto* fig3_cmd = app.add_subcommand("fig3", "Outcome probabilities versus Bob's basis, as CSV");
    fig3_cmd->add_option("--points", fig3.points, "Number of theta samples in [0, pi]");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo run plus reciprocity test, as JSON");
    sim_cmd->add_option("--config,config", sim.config, "Scenario config file")->required();
    sim_cmd->add_option("--threads", sim.threads, "Worker threads");
    sim_cmd->add_flag("--no-timestamp", sim.no_timestamp, "Omit the timestamp field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*phase_cmd) return cmd_phase(phase, flags);
        if (*fig3_cmd) return cmd_fig3(fig3, flags);
        if (*sim_cmd) return cmd_simulate(sim, flags);
    } catch (const gpchan::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const gpchan::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
