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

#include "gpchan/poincare.hpp"

#include <gtest/gtest.h>

#include "gpchan/errors.hpp"
#include "oracles.hpp"

using namespace gpchan;
using gpchan::testing::random_state;
using gpchan::testing::random_unit;
using gpchan::testing::uniform;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void expect_complex_near(Complex a, Complex b, double tol) {
    EXPECT_NEAR(a.real(), b.real(), tol);
    EXPECT_NEAR(a.imag(), b.imag(), tol);
}

double norm_of(const PureQubit& q) { return std::norm(q.amp_r()) + std::norm(q.amp_l()); }

PolarizationUnitary random_unitary(std::mt19937_64& rng) {
    return rotation_about_axis(random_unit(rng), uniform(rng, -10.0, 10.0)).phased(uniform(rng, -kPi, kPi));
}

}  // namespace

TEST(StateFromAngles, poles_and_equator) {
    const PureQubit r = state_from_angles(0.0, 0.0);
    expect_complex_near(r.amp_r(), 1.0, 1e-15);
    expect_complex_near(r.amp_l(), 0.0, 1e-15);

    const PureQubit l = state_from_angles(kPi, 0.0);
    expect_complex_near(l.amp_r(), 0.0, 1e-15);
    expect_complex_near(l.amp_l(), 1.0, 1e-15);

    const PureQubit eq = state_from_angles(kPi / 2.0, 0.0);
    expect_complex_near(eq.amp_r(), kInvSqrt2, 1e-15);
    expect_complex_near(eq.amp_l(), kInvSqrt2, 1e-15);
}

TEST(StateFromAngles, azimuth_phase_sits_on_r) {
    const PureQubit q = state_from_angles(kPi / 3.0, 0.7);
    expect_complex_near(q.amp_r(), std::polar(std::cos(kPi / 6.0), -0.7), 1e-15);
    expect_complex_near(q.amp_l(), std::sin(kPi / 6.0), 1e-15);
}

TEST(LinearView, circular_convention) {
    const auto r = linear_view(ket_r());
    expect_complex_near(r[0], Complex(0.0, kInvSqrt2), 1e-15);
    expect_complex_near(r[1], kInvSqrt2, 1e-15);

    const auto v = linear_view(state_from_angles(kPi / 2.0, 0.0));
    expect_complex_near(v[0], 0.0, 1e-15);
    expect_complex_near(v[1], 1.0, 1e-15);
}

// The convention is the one that turns (psi + psi_perp)/sqrt2 into
// cos(theta/2)|V> - i sin(theta/2)|H>.
TEST(LinearView, reproduces_bob_basis_ket) {
    for (double theta : {0.0, 0.3, kPi / 3.0, kPi / 2.0, 2.0, kPi}) {
        const auto hv = linear_view(bob_basis(theta).plus());
        expect_complex_near(hv[0], Complex(0.0, -std::sin(theta / 2.0)), 1e-14);
        expect_complex_near(hv[1], std::cos(theta / 2.0), 1e-14);
    }
}

TEST(LinearView, round_trip_property) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const PureQubit q = random_state(rng);
        const auto hv = linear_view(q);
        const PureQubit back = PureQubit::from_linear(hv[0], hv[1]);
        expect_complex_near(back.amp_r(), q.amp_r(), 1e-12);
        expect_complex_near(back.amp_l(), q.amp_l(), 1e-12);
    }
}

TEST(BlochVector, chart) {
    const BlochVector r = bloch_vector(ket_r());
    EXPECT_NEAR(r.z, 1.0, 1e-15);
    const BlochVector l = bloch_vector(ket_l());
    EXPECT_NEAR(l.z, -1.0, 1e-15);
    const BlochVector x = bloch_vector(state_from_angles(kPi / 2.0, 0.0));
    EXPECT_NEAR(x.x, 1.0, 1e-15);
    EXPECT_NEAR(x.y, 0.0, 1e-15);
    EXPECT_NEAR(x.z, 0.0, 1e-15);
    // Linear polarizations lie on the equator.
    EXPECT_NEAR(bloch_vector(ket_h()).z, 0.0, 1e-15);
    EXPECT_NEAR(bloch_vector(ket_v()).x, 1.0, 1e-15);
}

TEST(BlochVector, matches_spherical_angles_and_has_unit_norm) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const double theta = uniform(rng, 0.0, kPi);
        const double phi = uniform(rng, 0.0, 2.0 * kPi);
        const BlochVector b = bloch_vector(state_from_angles(theta, phi));
        EXPECT_NEAR(b.x, std::sin(theta) * std::cos(phi), 1e-12);
        EXPECT_NEAR(b.y, std::sin(theta) * std::sin(phi), 1e-12);
        EXPECT_NEAR(b.z, std::cos(theta), 1e-12);
        EXPECT_NEAR(b.norm(), 1.0, 1e-12);
    }
}

TEST(BlochVector, state_from_bloch_inverts_chart) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const BlochVector n = random_unit(rng);
        const BlochVector back = bloch_vector(state_from_bloch(n));
        EXPECT_NEAR((back - n).norm(), 0.0, 1e-12);
    }
}

TEST(PancharatnamPhase, examples) {
    EXPECT_EQ(pancharatnam_phase(ket_r(), ket_r()), 0.0);
    EXPECT_NEAR(pancharatnam_phase(ket_r(), state_from_angles(kPi / 2.0, 0.0)), 0.0, 1e-15);
    EXPECT_THROW(pancharatnam_phase(ket_r(), ket_l()), OrthogonalStates);
}

TEST(PancharatnamPhase, range_is_half_open) {
    EXPECT_DOUBLE_EQ(pancharatnam_phase(ket_r(), ket_r().phased(kPi)), kPi);
    EXPECT_DOUBLE_EQ(pancharatnam_phase(ket_r(), ket_r().phased(-kPi)), kPi);
}

TEST(PancharatnamPhase, gauge_covariance_property) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const PureQubit q1 = random_state(rng);
        const PureQubit q2 = random_state(rng);
        if (std::abs(q1.inner(q2)) < 1e-3) continue;
        const double a = uniform(rng, -kPi, kPi);
        const double b = uniform(rng, -kPi, kPi);
        const double lhs = pancharatnam_phase(q1.phased(a), q2.phased(b));
        const double rhs = pancharatnam_phase(q1, q2) + b - a;
        EXPECT_LT(gpchan::testing::phase_distance(lhs, rhs), 1e-12);
    }
}

TEST(PancharatnamPhase, configurable_threshold) {
    const PureQubit almost = PureQubit::from_amplitudes(1e-6, 1.0);
    EXPECT_NO_THROW(pancharatnam_phase(ket_r(), almost));
    EXPECT_THROW(pancharatnam_phase(ket_r(), almost, 1e-3), OrthogonalStates);
}

TEST(RotationAboutAxis, identity_double_cover_half_turn) {
    EXPECT_LT(rotation_about_axis(BlochVector::unit_z(), 0.0).distance(PolarizationUnitary::identity()), 1e-15);
    EXPECT_LT(rotation_about_axis(BlochVector::unit_z(), 2.0 * kPi).distance(PolarizationUnitary::identity().phased(kPi)),
              1e-15);
    const PureQubit x = state_from_angles(kPi / 2.0, 0.0);
    const BlochVector turned = bloch_vector(rotation_about_axis(BlochVector::unit_z(), kPi) * x);
    EXPECT_NEAR(turned.x, -1.0, 1e-15);
    EXPECT_NEAR(turned.y, 0.0, 1e-15);
}

TEST(RotationAboutAxis, right_hand_rule_matches_rodrigues) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        const BlochVector axis = random_unit(rng);
        const double angle = uniform(rng, -7.0, 7.0);
        const PureQubit q = random_state(rng);
        const BlochVector got = bloch_vector(rotation_about_axis(axis, angle) * q);
        const BlochVector want = gpchan::testing::rodrigues(bloch_vector(q), axis, angle);
        EXPECT_NEAR((got - want).norm(), 0.0, 1e-12);
    }
}

TEST(RotationAboutAxis, rejects_non_unit_axis) {
    EXPECT_THROW(rotation_about_axis({0.0, 0.0, 2.0}, 1.0), std::invalid_argument);
}

TEST(RotationTakingZTo, maps_pole_onto_axis) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const BlochVector axis = random_unit(rng);
        EXPECT_NEAR((bloch_vector(rotation_taking_z_to(axis) * ket_r()) - axis).norm(), 0.0, 1e-12);
    }
    EXPECT_NEAR(bloch_vector(rotation_taking_z_to(-BlochVector::unit_z()) * ket_r()).z, -1.0, 1e-15);
}

TEST(GeometricPhaseGate, examples) {
    EXPECT_LT(geometric_phase_gate(BlochVector::unit_z(), 0.0).distance(PolarizationUnitary::identity()), 1e-15);
    const double beta = 0.83;
    const PureQubit out = geometric_phase_gate(BlochVector::unit_z(), beta) * ket_r();
    expect_complex_near(out.amp_r(), std::polar(1.0, -beta), 1e-15);
    expect_complex_near(out.amp_l(), 0.0, 1e-15);
}

TEST(GeometricPhaseGate, equals_projector_form) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
        const double theta = uniform(rng, 0.0, kPi);
        const double beta = uniform(rng, -kPi, kPi);
        const PureQubit psi = psi_state(theta);
        const PureQubit perp = psi_perp_state(theta);
        const Complex em = std::polar(1.0, -beta);
        const Complex ep = std::polar(1.0, beta);
        PolarizationUnitary::Matrix m{};
        const std::array<Complex, 2> a{psi.amp_r(), psi.amp_l()};
        const std::array<Complex, 2> b{perp.amp_r(), perp.amp_l()};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) m[r][c] = em * a[r] * std::conj(a[c]) + ep * b[r] * std::conj(b[c]);
        }
        const auto gate = geometric_phase_gate(bloch_vector(psi), beta);
        EXPECT_LT(gate.distance(PolarizationUnitary(m)), 1e-12);

        // Linearity on (psi + psi_perp)/sqrt2.
        const PureQubit mixed = bob_basis(theta).plus();
        const PureQubit acted = gate * mixed;
        expect_complex_near(acted.amp_r(), (em * psi.amp_r() + ep * perp.amp_r()) * kInvSqrt2, 1e-12);
        expect_complex_near(acted.amp_l(), (em * psi.amp_l() + ep * perp.amp_l()) * kInvSqrt2, 1e-12);
    }
}

TEST(PolarizationUnitary, products_stay_unitary) {
    std::mt19937_64 rng(12);
    PolarizationUnitary u;
    for (int i = 0; i < 100; ++i) {
        u = random_unitary(rng) * u;
        ASSERT_LT(u.unitarity_error(), 1e-12);
        ASSERT_NEAR(std::abs(u.determinant()), 1.0, 1e-12);
    }
}

TEST(PolarizationUnitary, normalization_after_every_operation) {
    std::mt19937_64 rng(13);
    PureQubit q = random_state(rng);
    for (int i = 0; i < 1000; ++i) {
        q = random_unitary(rng) * q;
        ASSERT_NEAR(norm_of(q), 1.0, 1e-12);
    }
}

TEST(PolarizationUnitary, rejects_non_unitary_matrix) {
    EXPECT_THROW(PolarizationUnitary({{{2.0, 0.0}, {0.0, 1.0}}}), std::invalid_argument);
}

TEST(PolarizationUnitary, linear_matrix_round_trip) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        const auto u = random_unitary(rng);
        EXPECT_LT(PolarizationUnitary::from_linear_matrix(u.linear_matrix()).distance(u), 1e-12);
    }
}

TEST(MeasurementBasis, validates_orthogonality) {
    EXPECT_NO_THROW(MeasurementBasis(ket_r(), ket_l(), "RL"));
    EXPECT_THROW(MeasurementBasis(ket_r(), ket_h(), "bad"), std::invalid_argument);
    for (double t : {0.0, 0.5, 1.5, kPi}) {
        EXPECT_NO_THROW(bob_basis(t));
        EXPECT_NO_THROW(linear_basis(t));
    }
}

TEST(MeasurementBasis, linear_alpha_zero_is_h_v) {
    const auto b = linear_basis(0.0);
    EXPECT_NEAR(std::abs(b.plus().inner(ket_h())), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(b.minus().inner(ket_v())), 1.0, 1e-15);
}

TEST(PureQubit, global_phase_is_kept) {
    const PureQubit q = ket_r().phased(0.4);
    expect_complex_near(q.amp_r(), std::polar(1.0, 0.4), 1e-15);
    EXPECT_THROW(PureQubit::from_amplitudes(0.0, 0.0), std::invalid_argument);
}
