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

#include "gpchan/detect.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "gpchan/errors.hpp"

namespace gpchan {

MeasurementBasis AliceBasisChoice::basis() const {
    return kind == Kind::Circular ? circular_basis() : linear_basis(alpha);
}

void Scenario::validate() const {
    if (pairs_per_setting < 1) {
        throw std::invalid_argument("pairs_per_setting must be at least 1");
    }
    if (theta_grid.empty()) {
        throw std::invalid_argument("theta_grid is empty");
    }
    if (theta_grid.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("theta_grid too long");
    }
    for (double t : theta_grid) {
        if (!(t >= 0.0 && t <= kPi)) {
            throw std::invalid_argument("theta_grid values must lie in [0, pi]");
        }
    }
    if (std::abs(rotation_axis.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("rotation_axis must have unit norm");
    }
    if (adversary.kind == AdversaryKind::FixedCompensator && !(adversary.theta0 >= 0.0 && adversary.theta0 <= kPi)) {
        throw std::invalid_argument("compensator theta0 must lie in [0, pi]");
    }
}

PolarizationUnitary effective_bob_unitary(const Scenario& scenario, double theta) {
    if (!scenario.attack_present) {
        return PolarizationUnitary::identity();
    }
    const AttackDevice device = scenario.device();
    const PolarizationUnitary attack = attack_operator(device, theta);
    switch (scenario.adversary.kind) {
        case AdversaryKind::None:
            return attack;
        case AdversaryKind::FixedCompensator:
            return attack * attack_operator(device, scenario.adversary.theta0).adjoint();
        case AdversaryKind::BasisAware:
            return attack * attack.adjoint();
    }
    throw std::invalid_argument("unknown adversary");
}

std::array<double, 4> outcome_distribution(const Scenario& scenario, double theta) {
    const TwoQubitState state = apply_to_bob(phi_minus(), effective_bob_unitary(scenario, theta));
    return joint_distribution(state, {scenario.alice.basis(), bob_basis(theta)});
}

std::array<double, 4> null_distribution(const AliceBasisChoice& alice, double theta) {
    return joint_distribution(phi_minus(), {alice.basis(), bob_basis(theta)});
}

std::uint64_t TallyTable::total(std::size_t row) const {
    const auto& c = counts.at(row);
    return c[0] + c[1] + c[2] + c[3];
}

TallyTable simulate(const Scenario& scenario, const SimulateOptions& options) {
    scenario.validate();
    const std::size_t rows = scenario.theta_grid.size();
    std::vector<kernels::CellThresholds> thresholds(rows);
    for (std::size_t j = 0; j < rows; ++j) {
        thresholds[j] = kernels::thresholds_from_probabilities(outcome_distribution(scenario, scenario.theta_grid[j]));
    }

    const PhiloxKey key = philox_key(scenario.seed);
    const std::uint64_t n = scenario.pairs_per_setting;
    const unsigned workers = std::max(1u, options.threads);
    // partial[w][j] holds worker w's counts for row j.
    std::vector<std::vector<kernels::CellCounts>> partial(workers, std::vector<kernels::CellCounts>(rows));
    auto run = [&](unsigned w) {
        const std::uint64_t begin = n * w / workers;
        const std::uint64_t end = n * (w + 1) / workers;
        for (std::size_t j = 0; j < rows; ++j) {
            partial[w][j] =
                kernels::count_categorical(key, static_cast<std::uint32_t>(j), begin, end, thresholds[j], options.isa);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    TallyTable table{scenario.theta_grid, std::vector<kernels::CellCounts>(rows), scenario.alice};
    for (const auto& worker : partial) {
        for (std::size_t j = 0; j < rows; ++j) {
            for (std::size_t k = 0; k < 4; ++k) table.counts[j][k] += worker[j][k];
        }
    }
    return table;
}

std::vector<double> estimate_contrast(const TallyTable& table) {
    if (table.counts.empty() || table.counts.size() != table.theta_grid.size()) {
        throw EmptyTally("tally table has no rows");
    }
    std::vector<double> out;
    out.reserve(table.counts.size());
    for (std::size_t j = 0; j < table.counts.size(); ++j) {
        const auto& c = table.counts[j];
        const std::uint64_t n = table.total(j);
        if (n == 0) {
            throw EmptyTally("tally row has no counts");
        }
        const double agree_minus_disagree = (static_cast<double>(c[0]) - static_cast<double>(c[1])) +
                                            (static_cast<double>(c[3]) - static_cast<double>(c[2]));
        out.push_back(agree_minus_disagree / static_cast<double>(n));
    }
    return out;
}

DetectionVerdict reciprocity_test(const TallyTable& table, double significance) {
    if (!(significance > 0.0 && significance < 1.0)) {
        throw std::invalid_argument("significance must lie in (0, 1)");
    }
    DetectionVerdict verdict;
    verdict.significance = significance;
    verdict.contrast_estimates = estimate_contrast(table);

    bool impossible_under_null = false;
    for (std::size_t j = 0; j < table.counts.size(); ++j) {
        const auto& c = table.counts[j];
        const auto n = static_cast<double>(table.total(j));
        const auto null = null_distribution(table.alice, table.theta_grid[j]);
        const std::array<double, 2> p{null[0] + null[3], null[1] + null[2]};
        const std::array<double, 2> observed{static_cast<double>(c[0] + c[3]), static_cast<double>(c[1] + c[2])};

        bool structural_zero = false;
        for (std::size_t k = 0; k < 2; ++k) {
            // Rounding leaves ~1e-17 where the model probability is exactly 0.
            if (p[k] <= 1e-15) {
                structural_zero = true;
                if (observed[k] > 0.0) impossible_under_null = true;
            } else if (n * p[k] < 5.0) {
                throw DegenerateModel("expected cell count below 5; use more pairs or drop this theta");
            }
        }
        if (structural_zero) continue;
        for (std::size_t k = 0; k < 2; ++k) {
            const double expected = n * p[k];
            verdict.chi_square += (observed[k] - expected) * (observed[k] - expected) / expected;
        }
        ++verdict.degrees_of_freedom;
    }

    if (impossible_under_null) {
        verdict.chi_square = std::numeric_limits<double>::infinity();
        verdict.p_value = 0.0;
    } else if (verdict.degrees_of_freedom == 0) {
        verdict.p_value = 1.0;
    } else {
        const boost::math::chi_squared dist(static_cast<double>(verdict.degrees_of_freedom));
        verdict.p_value = boost::math::cdf(boost::math::complement(dist, verdict.chi_square));
    }
    verdict.non_reciprocal = verdict.p_value < significance;
    return verdict;
}

}  // namespace gpchan
