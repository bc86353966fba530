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

#include <gtest/gtest.h>

#include "gpchan/errors.hpp"
#include "oracles.hpp"

using namespace gpchan;
using gpchan::testing::binomial_3sigma;

namespace {

const std::vector<double> kGrid{kPi / 6.0, kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0};

Scenario make_scenario(bool attack, AdversaryKind kind = AdversaryKind::None, std::uint64_t seed = 7) {
    Scenario s;
    s.attack_present = attack;
    s.adversary.kind = kind;
    s.theta_grid = kGrid;
    s.pairs_per_setting = 100000;
    s.seed = seed;
    return s;
}

// Counts proportional to a distribution, for plug-in estimator checks.
TallyTable table_from_probabilities(double theta, const std::array<double, 4>& p, double n) {
    kernels::CellCounts c{};
    for (int k = 0; k < 4; ++k) c[k] = static_cast<std::uint64_t>(std::llround(p[k] * n));
    return {{theta}, {c}, AliceBasisChoice{}};
}

std::array<double, 4> circular_cells(double theta, double beta) {
    const double x = std::sin(theta) * std::cos(2.0 * beta);
    return {0.25 * (1 + x), 0.25 * (1 - x), 0.25 * (1 - x), 0.25 * (1 + x)};
}

}  // namespace

TEST(EffectiveUnitary, attack_off_is_identity) {
    for (double t : kGrid) {
        EXPECT_LT(effective_bob_unitary(make_scenario(false), t).distance(PolarizationUnitary::identity()), 1e-15);
    }
}

TEST(EffectiveUnitary, basis_aware_is_identity) {
    for (int i = 0; i <= 36; ++i) {
        const double t = kPi * i / 36.0;
        EXPECT_LT(effective_bob_unitary(make_scenario(true, AdversaryKind::BasisAware), t)
                      .distance(PolarizationUnitary::identity()),
                  1e-12);
    }
}

TEST(EffectiveUnitary, compensator_cancels_at_its_own_theta) {
    Scenario s = make_scenario(true, AdversaryKind::FixedCompensator);
    s.adversary.theta0 = 1.1;
    EXPECT_LT(effective_bob_unitary(s, 1.1).distance(PolarizationUnitary::identity()), 1e-12);
}

TEST(EffectiveUnitary, compensator_misses_other_thetas) {
    Scenario s = make_scenario(true, AdversaryKind::FixedCompensator);
    s.adversary.theta0 = kPi / 2.0;
    const double theta = kPi / 3.0;
    EXPECT_GT(effective_bob_unitary(s, theta).distance(PolarizationUnitary::identity()), 0.1);
    const double p = outcome_distribution(s, theta)[0];
    EXPECT_GT(std::abs(p - 0.25 * (1.0 + std::sin(theta))), 0.1);
}

TEST(OutcomeDistribution, matches_circular_closed_form) {
    const Scenario s = make_scenario(true);
    for (int i = 0; i <= 180; ++i) {
        const double t = kPi * i / 180.0;
        const auto d = outcome_distribution(s, t);
        const auto e = circular_cells(t, attack_beta(t));
        for (int k = 0; k < 4; ++k) EXPECT_NEAR(d[k], e[k], 1e-12) << t << " cell " << k;
    }
}

TEST(OutcomeDistribution, basis_aware_equals_null) {
    const Scenario s = make_scenario(true, AdversaryKind::BasisAware);
    for (int i = 0; i <= 180; ++i) {
        const double t = kPi * i / 180.0;
        const auto d = outcome_distribution(s, t);
        const auto n = null_distribution(s.alice, t);
        for (int k = 0; k < 4; ++k) EXPECT_NEAR(d[k], n[k], 1e-12);
    }
}

TEST(Simulate, counts_sum_to_pairs) {
    const auto table = simulate(make_scenario(true));
    ASSERT_EQ(table.counts.size(), kGrid.size());
    for (std::size_t j = 0; j < kGrid.size(); ++j) EXPECT_EQ(table.total(j), 100000u);
    EXPECT_EQ(table.theta_grid, kGrid);
}

TEST(Simulate, fraction_at_right_angle) {
    for (bool attack : {false, true}) {
        Scenario s = make_scenario(attack);
        s.theta_grid = {kPi / 2.0};
        const auto table = simulate(s);
        const double frac = static_cast<double>(table.counts[0][0]) / 1e5;
        EXPECT_LE(std::abs(frac - 0.5), binomial_3sigma(0.5, 1e5)) << attack;
    }
}

TEST(Simulate, zero_probability_cells_never_sampled) {
    Scenario s = make_scenario(false);
    s.theta_grid = {kPi / 2.0};
    const auto table = simulate(s);
    EXPECT_EQ(table.counts[0][1], 0u);
    EXPECT_EQ(table.counts[0][2], 0u);
}

TEST(Simulate, fractions_follow_closed_form) {
    const Scenario s = make_scenario(true, AdversaryKind::None, 99);
    const auto table = simulate(s);
    for (std::size_t j = 0; j < kGrid.size(); ++j) {
        const auto e = circular_cells(kGrid[j], attack_beta(kGrid[j]));
        for (int k = 0; k < 4; ++k) {
            const double frac = static_cast<double>(table.counts[j][k]) / 1e5;
            EXPECT_LE(std::abs(frac - e[k]), binomial_3sigma(e[k], 1e5) + 1e-12) << j << " " << k;
        }
    }
}

TEST(Simulate, deterministic_across_threads_and_kernels) {
    Scenario s = make_scenario(true, AdversaryKind::None, 1234);
    s.pairs_per_setting = 100003;
    const auto reference = simulate(s, {1, kernels::Isa::Scalar});
    for (unsigned threads : {1u, 2u, 3u, 8u}) {
        EXPECT_EQ(simulate(s, {threads, kernels::Isa::Scalar}), reference) << threads;
        if (kernels::isa_available(kernels::Isa::Avx2)) {
            EXPECT_EQ(simulate(s, {threads, kernels::Isa::Avx2}), reference) << threads;
        }
    }
}

TEST(Simulate, seed_changes_tallies) {
    EXPECT_NE(simulate(make_scenario(true, AdversaryKind::None, 1)), simulate(make_scenario(true, AdversaryKind::None, 2)));
}

TEST(Simulate, rejects_invalid_scenarios) {
    Scenario s = make_scenario(true);
    s.pairs_per_setting = 0;
    EXPECT_THROW(simulate(s), std::invalid_argument);
    s = make_scenario(true);
    s.theta_grid = {4.0};
    EXPECT_THROW(simulate(s), std::invalid_argument);
    s.theta_grid = {};
    EXPECT_THROW(simulate(s), std::invalid_argument);
}

TEST(EstimateContrast, plug_in_examples) {
    const double n = 1e9;
    for (double t : {0.3, kPi / 2.0, 2.5}) {
        EXPECT_NEAR(estimate_contrast(table_from_probabilities(t, circular_cells(t, 0.0), n))[0], std::sin(t), 1e-8);
    }
    EXPECT_NEAR(estimate_contrast(table_from_probabilities(kPi / 3.0, circular_cells(kPi / 3.0, -kPi / 2.0), n))[0],
                -0.86603, 1e-5);
    const TallyTable flat{{1.0}, {{10, 10, 10, 10}}, AliceBasisChoice{}};
    EXPECT_EQ(estimate_contrast(flat)[0], 0.0);
}

TEST(EstimateContrast, empty_tables) {
    EXPECT_THROW(estimate_contrast(TallyTable{}), EmptyTally);
    const TallyTable zero{{1.0}, {{0, 0, 0, 0}}, AliceBasisChoice{}};
    EXPECT_THROW(estimate_contrast(zero), EmptyTally);
}

TEST(EstimateContrast, consistency_at_one_million_pairs) {
    int good = 0;
    const int seeds = 20;
    for (int seed = 0; seed < seeds; ++seed) {
        Scenario s = make_scenario(true, AdversaryKind::None, 5000 + seed);
        s.pairs_per_setting = 1000000;
        const auto est = estimate_contrast(simulate(s));
        bool ok = true;
        for (std::size_t j = 0; j < kGrid.size(); ++j) {
            const double truth = std::sin(kGrid[j]) * std::cos(2.0 * attack_beta(kGrid[j]));
            ok = ok && std::abs(est[j] - truth) < 5e-3;
        }
        good += ok ? 1 : 0;
    }
    EXPECT_GE(good, 19);
}

TEST(ReciprocityTest, null_run_is_not_flagged) {
    const auto v = reciprocity_test(simulate(make_scenario(false)));
    EXPECT_FALSE(v.non_reciprocal);
    EXPECT_EQ(v.degrees_of_freedom, 3u);
    EXPECT_GE(v.p_value, 0.001);
    EXPECT_LE(v.p_value, 1.0);
}

TEST(ReciprocityTest, attack_is_flagged) {
    const auto v = reciprocity_test(simulate(make_scenario(true)));
    EXPECT_TRUE(v.non_reciprocal);
    EXPECT_LT(v.p_value, 1e-6);
    ASSERT_EQ(v.contrast_estimates.size(), kGrid.size());
    EXPECT_NEAR(v.contrast_estimates[1], -std::sin(kPi / 3.0), 0.02);
}

TEST(ReciprocityTest, basis_aware_adversary_is_not_flagged) {
    const auto v = reciprocity_test(simulate(make_scenario(true, AdversaryKind::BasisAware)));
    EXPECT_FALSE(v.non_reciprocal);
    EXPECT_EQ(simulate(make_scenario(true, AdversaryKind::BasisAware)), simulate(make_scenario(false)));
}

TEST(ReciprocityTest, fixed_compensator_is_flagged) {
    Scenario s = make_scenario(true, AdversaryKind::FixedCompensator);
    s.adversary.theta0 = kPi / 2.0;
    EXPECT_TRUE(reciprocity_test(simulate(s)).non_reciprocal);
}

TEST(ReciprocityTest, structural_zero_hit_gives_zero_p) {
    const TallyTable t{{kPi / 2.0}, {{500, 1, 0, 499}}, AliceBasisChoice{}};
    const auto v = reciprocity_test(t);
    EXPECT_EQ(v.p_value, 0.0);
    EXPECT_TRUE(std::isinf(v.chi_square));
    EXPECT_TRUE(v.non_reciprocal);
}

TEST(ReciprocityTest, only_structural_rows_give_p_one) {
    const TallyTable t{{kPi / 2.0}, {{500, 0, 0, 500}}, AliceBasisChoice{}};
    const auto v = reciprocity_test(t);
    EXPECT_EQ(v.degrees_of_freedom, 0u);
    EXPECT_EQ(v.p_value, 1.0);
    EXPECT_FALSE(v.non_reciprocal);
}

TEST(ReciprocityTest, chi_square_by_hand) {
    // theta = pi/6: agree probability 3/4 under the null.
    const TallyTable t{{kPi / 6.0}, {{400, 150, 150, 300}}, AliceBasisChoice{}};
    const auto v = reciprocity_test(t, 0.05);
    const double chi = (700.0 - 750.0) * (700.0 - 750.0) / 750.0 + (300.0 - 250.0) * (300.0 - 250.0) / 250.0;
    EXPECT_NEAR(v.chi_square, chi, 1e-9);
    EXPECT_EQ(v.degrees_of_freedom, 1u);
    // Survival of chi-square(1) at x is erfc(sqrt(x/2)).
    EXPECT_NEAR(v.p_value, std::erfc(std::sqrt(chi / 2.0)), 1e-12);
    EXPECT_EQ(v.significance, 0.05);
}

TEST(ReciprocityTest, errors) {
    const TallyTable tiny{{kPi / 3.0}, {{3, 0, 0, 1}}, AliceBasisChoice{}};
    EXPECT_THROW(reciprocity_test(tiny), DegenerateModel);
    EXPECT_THROW(reciprocity_test(TallyTable{}), EmptyTally);
    const TallyTable ok{{1.0}, {{10, 10, 10, 10}}, AliceBasisChoice{}};
    EXPECT_THROW(reciprocity_test(ok, 0.0), std::invalid_argument);
    EXPECT_THROW(reciprocity_test(ok, 1.0), std::invalid_argument);
}

TEST(ReciprocityTest, linear_alice_basis) {
    Scenario s = make_scenario(true);
    s.alice = {AliceBasisChoice::Kind::Linear, 0.0};
    s.theta_grid = {kPi / 6.0, kPi / 3.0, 2.0 * kPi / 3.0};
    const auto v = reciprocity_test(simulate(s));
    EXPECT_GE(v.p_value, 0.0);
    EXPECT_LE(v.p_value, 1.0);
    Scenario null = s;
    null.attack_present = false;
    EXPECT_FALSE(reciprocity_test(simulate(null)).non_reciprocal);
}
