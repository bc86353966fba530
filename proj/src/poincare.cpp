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

#include "gpchan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpchan {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};

using Matrix = PolarizationUnitary::Matrix;

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return out;
}

Matrix adjoint_of(const Matrix& a) {
    return {{{std::conj(a[0][0]), std::conj(a[1][0])}, {std::conj(a[0][1]), std::conj(a[1][1])}}};
}

Matrix transpose_of(const Matrix& a) { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }

// Maps circular amplitudes (a_R, a_L) to linear amplitudes (a_H, a_V).
const Matrix& circular_to_linear() {
    static const Matrix t{{{kI * kInvSqrt2, -kI * kInvSqrt2}, {Complex{kInvSqrt2}, Complex{kInvSqrt2}}}};
    return t;
}

double unitarity_error_of(const Matrix& m) {
    const Matrix p = multiply(adjoint_of(m), m);
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            err = std::max(err, std::abs(p[i][j] - (i == j ? 1.0 : 0.0)));
        }
    }
    return err;
}

void require_unit_axis(const BlochVector& axis) {
    if (std::abs(axis.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("rotation axis must have unit norm");
    }
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return {x / n, y / n, z / n};
}

PureQubit PureQubit::from_amplitudes(Complex amp_r, Complex amp_l) {
    const double n = std::sqrt(std::norm(amp_r) + std::norm(amp_l));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("state amplitudes must be finite and not both zero");
    }
    return {amp_r / n, amp_l / n};
}

PureQubit PureQubit::from_linear(Complex amp_h, Complex amp_v) {
    return from_amplitudes((-kI * amp_h + amp_v) * kInvSqrt2, (kI * amp_h + amp_v) * kInvSqrt2);
}

PureQubit PureQubit::phased(double phase) const {
    const Complex f = std::polar(1.0, phase);
    return {r_ * f, l_ * f};
}

PureQubit ket_r() { return PureQubit::from_amplitudes(1.0, 0.0); }
PureQubit ket_l() { return PureQubit::from_amplitudes(0.0, 1.0); }
PureQubit ket_h() { return PureQubit::from_linear(1.0, 0.0); }
PureQubit ket_v() { return PureQubit::from_linear(0.0, 1.0); }

PureQubit state_from_angles(double theta, double phi) {
    return PureQubit::from_amplitudes(std::polar(std::cos(theta / 2.0), -phi), std::sin(theta / 2.0));
}

PureQubit psi_state(double theta) { return state_from_angles(theta, 0.0); }

PureQubit psi_perp_state(double theta) {
    return PureQubit::from_amplitudes(-std::sin(theta / 2.0), std::cos(theta / 2.0));
}

std::array<Complex, 2> linear_view(const PureQubit& q) {
    const Matrix& t = circular_to_linear();
    return {t[0][0] * q.amp_r() + t[0][1] * q.amp_l(), t[1][0] * q.amp_r() + t[1][1] * q.amp_l()};
}

BlochVector bloch_vector(const PureQubit& q) {
    const Complex c = std::conj(q.amp_r()) * q.amp_l();
    return {2.0 * c.real(), 2.0 * c.imag(), std::norm(q.amp_r()) - std::norm(q.amp_l())};
}

PureQubit state_from_bloch(const BlochVector& n) {
    const BlochVector u = n.normalized();
    const double theta = std::acos(std::clamp(u.z, -1.0, 1.0));
    const double phi = std::atan2(u.y, u.x);
    return PureQubit::from_amplitudes(std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi));
}

double pancharatnam_phase(const PureQubit& a, const PureQubit& b, double epsilon) {
    const Complex overlap = a.inner(b);
    if (std::abs(overlap) <= epsilon) {
        throw OrthogonalStates("Pancharatnam phase undefined for (near-)orthogonal states");
    }
    const double phase = std::arg(overlap);
    return phase == -kPi ? kPi : phase;
}

PolarizationUnitary::PolarizationUnitary() : m_{{{1.0, 0.0}, {0.0, 1.0}}} {}

PolarizationUnitary::PolarizationUnitary(const Matrix& m) : m_(m) {
    if (!(unitarity_error_of(m) <= 1e-9)) {
        throw std::invalid_argument("matrix is not unitary");
    }
}

PolarizationUnitary PolarizationUnitary::from_linear_matrix(const Matrix& m) {
    const Matrix& t = circular_to_linear();
    return PolarizationUnitary(multiply(adjoint_of(t), multiply(m, t)));
}

Matrix PolarizationUnitary::linear_matrix() const {
    const Matrix& t = circular_to_linear();
    return multiply(t, multiply(m_, adjoint_of(t)));
}

PolarizationUnitary PolarizationUnitary::adjoint() const { return {adjoint_of(m_), Unchecked{}}; }

PolarizationUnitary PolarizationUnitary::linear_transpose() const {
    const Matrix& t = circular_to_linear();
    return {multiply(adjoint_of(t), multiply(transpose_of(linear_matrix()), t)), Unchecked{}};
}

PolarizationUnitary PolarizationUnitary::phased(double phase) const {
    const Complex f = std::polar(1.0, phase);
    Matrix out = m_;
    for (auto& row : out) {
        for (auto& v : row) {
            v *= f;
        }
    }
    return {out, Unchecked{}};
}

Complex PolarizationUnitary::determinant() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

double PolarizationUnitary::unitarity_error() const { return unitarity_error_of(m_); }

double PolarizationUnitary::distance(const PolarizationUnitary& other) const {
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            d = std::max(d, std::abs(m_[i][j] - other.m_[i][j]));
        }
    }
    return d;
}

PolarizationUnitary PolarizationUnitary::operator*(const PolarizationUnitary& rhs) const {
    return {multiply(m_, rhs.m_), Unchecked{}};
}

PureQubit PolarizationUnitary::operator*(const PureQubit& q) const {
    const auto [r, l] = apply(q.amp_r(), q.amp_l());
    return PureQubit::from_amplitudes(r, l);
}

std::array<Complex, 2> PolarizationUnitary::apply(Complex r, Complex l) const {
    return {m_[0][0] * r + m_[0][1] * l, m_[1][0] * r + m_[1][1] * l};
}

PolarizationUnitary rotation_about_axis(const BlochVector& axis, double angle) {
    require_unit_axis(axis);
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    // c I - i s (n.sigma), sigma in the {R, L} basis.
    const Matrix m{{{Complex{c, -s * axis.z}, Complex{-s * axis.y, -s * axis.x}},
                    {Complex{s * axis.y, -s * axis.x}, Complex{c, s * axis.z}}}};
    return PolarizationUnitary(m);
}

PolarizationUnitary geometric_phase_gate(const BlochVector& axis, double beta) {
    return rotation_about_axis(axis, 2.0 * beta);
}

PolarizationUnitary rotation_taking_z_to(const BlochVector& axis) {
    const BlochVector target = axis.normalized();
    const BlochVector cross = BlochVector::unit_z().cross(target);
    const double sin_angle = cross.norm();
    const double cos_angle = target.z;
    if (sin_angle < 1e-15) {
        return cos_angle > 0.0 ? PolarizationUnitary::identity() : rotation_about_axis(BlochVector::unit_x(), kPi);
    }
    return rotation_about_axis(cross * (1.0 / sin_angle), std::atan2(sin_angle, cos_angle));
}

MeasurementBasis::MeasurementBasis(PureQubit plus, PureQubit minus, std::string label)
    : plus_(plus), minus_(minus), label_(std::move(label)) {
    if (std::abs(plus_.inner(minus_)) > kNormTolerance) {
        throw std::invalid_argument("measurement basis kets are not orthogonal");
    }
}

MeasurementBasis circular_basis() { return {ket_r(), ket_l(), "RL"}; }

MeasurementBasis linear_basis(double alpha) {
    const double c = std::cos(alpha / 2.0);
    const double s = std::sin(alpha / 2.0);
    return {PureQubit::from_linear(c, s), PureQubit::from_linear(-s, c), "linear"};
}

MeasurementBasis bob_basis(double theta) {
    const PureQubit psi = psi_state(theta);
    const PureQubit perp = psi_perp_state(theta);
    return {PureQubit::from_amplitudes(psi.amp_r() + perp.amp_r(), psi.amp_l() + perp.amp_l()),
            PureQubit::from_amplitudes(psi.amp_r() - perp.amp_r(), psi.amp_l() - perp.amp_l()), "theta"};
}

}  // namespace gpchan
