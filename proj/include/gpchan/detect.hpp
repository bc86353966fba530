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

// Monte Carlo coincidence statistics and the non-reciprocity test.

#include <array>
#include <cstdint>
#include <vector>

#include "gpchan/bell.hpp"
#include "gpchan/channel.hpp"
#include "gpchan/kernels.hpp"

namespace gpchan {

enum class AdversaryKind { None, FixedCompensator, BasisAware };

struct Adversary {
    AdversaryKind kind = AdversaryKind::None;
    double theta0 = 0.0;  ///< FixedCompensator only

    bool operator==(const Adversary&) const = default;
};

struct AliceBasisChoice {
    enum class Kind { Circular, Linear };
    Kind kind = Kind::Circular;
    double alpha = 0.0;  ///< Linear only

    [[nodiscard]] MeasurementBasis basis() const;
    bool operator==(const AliceBasisChoice&) const = default;
};

struct Scenario {
    bool attack_present = true;
    BlochVector rotation_axis = BlochVector::unit_z();
    Adversary adversary;
    std::vector<double> theta_grid;
    AliceBasisChoice alice;
    std::uint64_t pairs_per_setting = 100000;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;
    [[nodiscard]] AttackDevice device() const { return {rotation_axis, 0.0, 0.0}; }
    bool operator==(const Scenario&) const = default;
};

/// What Bob's photon actually experiences for basis parameter theta.
PolarizationUnitary effective_bob_unitary(const Scenario& scenario, double theta);

/// Exact outcome distribution, cell order (+,+), (+,-), (-,+), (-,-).
std::array<double, 4> outcome_distribution(const Scenario& scenario, double theta);

/// Distribution with no device in the channel.
std::array<double, 4> null_distribution(const AliceBasisChoice& alice, double theta);

struct TallyTable {
    std::vector<double> theta_grid;
    std::vector<kernels::CellCounts> counts;  ///< one row per theta
    AliceBasisChoice alice;

    [[nodiscard]] std::uint64_t total(std::size_t row) const;
    bool operator==(const TallyTable&) const = default;
};

struct SimulateOptions {
    unsigned threads = 1;
    kernels::Isa isa = kernels::active_isa();
};

/// Draws pairs_per_setting outcomes per theta. Pair i at grid index j uses
/// Philox block (i, j) under the scenario seed, so the table depends only on
/// the scenario, never on thread count or kernel variant.
TallyTable simulate(const Scenario& scenario, const SimulateOptions& options = {});

/// Per theta, ((n++ - n+-) + (n-- - n-+)) / n, an unbiased estimate of
/// sin(theta) cos(2 beta) for a circular Alice basis. Throws EmptyTally.
std::vector<double> estimate_contrast(const TallyTable& table);

inline constexpr double kDefaultSignificance = 0.001;

struct DetectionVerdict {
    double chi_square = 0.0;
    unsigned degrees_of_freedom = 0;
    double p_value = 1.0;
    bool non_reciprocal = false;
    double significance = kDefaultSignificance;
    std::vector<double> contrast_estimates;

    bool operator==(const DetectionVerdict&) const = default;
};

/// Pearson chi-square of the agree (++, --) / disagree (+-, -+) split at each
/// theta against the no-device model, one degree of freedom per theta.
///
/// A cell whose null probability is exactly zero is a structural zero: the
/// theta contributes no degree of freedom if the cell is empty, and forces
/// p_value = 0 if it is not. Throws EmptyTally, std::invalid_argument for a
/// significance outside (0, 1), and DegenerateModel when a non-zero expected
/// count is below 5.
DetectionVerdict reciprocity_test(const TallyTable& table, double significance = kDefaultSignificance);

}  // namespace gpchan
