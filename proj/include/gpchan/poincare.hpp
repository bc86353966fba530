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

// Polarization-qubit algebra on the Poincare (Bloch) sphere.
//
// States are stored in the circular {R, L} basis. The linear basis is tied to
// it by the fixed convention
//
//     |R> = (|V> + i|H>) / sqrt(2),    |L> = (|V> - i|H>) / sqrt(2),
//
// and the sphere chart puts |R> at +z and the equal-weight state (|R>+|L>)/sqrt(2)
// at +x, so that x + iy = 2 conj(a_R) a_L. Global phase is never discarded.

#include <array>
#include <complex>
#include <numbers>
#include <string>

namespace gpchan {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kDefaultOrthogonalityEpsilon = 1e-9;

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    [[nodiscard]] double norm() const;
    [[nodiscard]] BlochVector normalized() const;
    [[nodiscard]] double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
    [[nodiscard]] BlochVector cross(const BlochVector& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
    BlochVector operator-() const { return {-x, -y, -z}; }
    bool operator==(const BlochVector&) const = default;

    static BlochVector unit_x() { return {1.0, 0.0, 0.0}; }
    static BlochVector unit_y() { return {0.0, 1.0, 0.0}; }
    static BlochVector unit_z() { return {0.0, 0.0, 1.0}; }
};

/// Normalized pure polarization state (amp_R, amp_L).
class PureQubit {
public:
    /// |R>.
    PureQubit() = default;

    /// Normalizes the input; throws std::invalid_argument for the zero vector.
    static PureQubit from_amplitudes(Complex amp_r, Complex amp_l);
    /// Inverse of linear_view().
    static PureQubit from_linear(Complex amp_h, Complex amp_v);

    [[nodiscard]] Complex amp_r() const { return r_; }
    [[nodiscard]] Complex amp_l() const { return l_; }

    /// <this|other>.
    [[nodiscard]] Complex inner(const PureQubit& other) const {
        return std::conj(r_) * other.r_ + std::conj(l_) * other.l_;
    }
    /// e^{i phase} |this>.
    [[nodiscard]] PureQubit phased(double phase) const;

private:
    PureQubit(Complex r, Complex l) : r_(r), l_(l) {}

    Complex r_{1.0, 0.0};
    Complex l_{0.0, 0.0};
};

PureQubit ket_r();
PureQubit ket_l();
PureQubit ket_h();
PureQubit ket_v();

/// e^{-i phi} cos(theta/2)|R> + sin(theta/2)|L>.
///
/// The formula is evaluated directly for any real input, so phi is taken
/// modulo 2pi and theta modulo 4pi (the period of the amplitude map).
/// theta in (pi, 2pi) gives the same ray as 2pi - theta at phi + pi, but with
/// a different global phase, so no folding is done.
PureQubit state_from_angles(double theta, double phi);

/// psi(theta) = cos(theta/2)|R> + sin(theta/2)|L>.
PureQubit psi_state(double theta);
/// psi_perp(theta) = -sin(theta/2)|R> + cos(theta/2)|L>.
PureQubit psi_perp_state(double theta);

/// (amp_H, amp_V) under the fixed circular/linear convention.
std::array<Complex, 2> linear_view(const PureQubit& q);

BlochVector bloch_vector(const PureQubit& q);

/// +1 eigenstate of n.sigma, in the gauge cos(t/2)|R> + e^{i p} sin(t/2)|L>.
PureQubit state_from_bloch(const BlochVector& n);

/// arg<a|b> in (-pi, pi]. Throws OrthogonalStates when |<a|b>| <= epsilon.
double pancharatnam_phase(const PureQubit& a, const PureQubit& b,
                          double epsilon = kDefaultOrthogonalityEpsilon);

/// 2x2 complex operator acting on circular-basis amplitudes.
class PolarizationUnitary {
public:
    using Matrix = std::array<std::array<Complex, 2>, 2>;

    /// Identity.
    PolarizationUnitary();
    /// Throws std::invalid_argument if `m` is not unitary within 1e-9.
    explicit PolarizationUnitary(const Matrix& m);

    static PolarizationUnitary identity() { return {}; }
    /// Builds from a matrix expressed in the {H, V} basis.
    static PolarizationUnitary from_linear_matrix(const Matrix& m);

    [[nodiscard]] const Matrix& matrix() const { return m_; }
    [[nodiscard]] Complex operator()(int row, int col) const { return m_[row][col]; }
    /// Matrix in the {H, V} basis.
    [[nodiscard]] Matrix linear_matrix() const;

    [[nodiscard]] PolarizationUnitary adjoint() const;
    /// Transpose taken in the linear basis (the Jones time-reversal partner).
    [[nodiscard]] PolarizationUnitary linear_transpose() const;
    [[nodiscard]] PolarizationUnitary phased(double phase) const;
    [[nodiscard]] Complex determinant() const;

    /// max_ij |(U^dagger U - I)_ij|.
    [[nodiscard]] double unitarity_error() const;
    /// max_ij |U_ij - V_ij|.
    [[nodiscard]] double distance(const PolarizationUnitary& other) const;

    PolarizationUnitary operator*(const PolarizationUnitary& rhs) const;
    PureQubit operator*(const PureQubit& q) const;
    /// Unnormalized action, used for amplitude bookkeeping in two-qubit states.
    [[nodiscard]] std::array<Complex, 2> apply(Complex r, Complex l) const;

private:
    struct Unchecked {};
    PolarizationUnitary(const Matrix& m, Unchecked) : m_(m) {}

    Matrix m_;
};

/// exp(-i (angle/2) axis.sigma): rotates Bloch vectors by `angle` about
/// `axis` (right-hand rule). Throws std::invalid_argument if the axis is not
/// unit norm within 1e-9.
PolarizationUnitary rotation_about_axis(const BlochVector& axis, double angle);

/// e^{-i beta}|n><n| + e^{+i beta}|n_perp><n_perp|, with |n> the +axis
/// eigenstate. Equal to rotation_about_axis(axis, 2 beta).
PolarizationUnitary geometric_phase_gate(const BlochVector& axis, double beta);

/// Minimal rotation carrying +z onto `axis` (a half turn about x for -z).
PolarizationUnitary rotation_taking_z_to(const BlochVector& axis);

/// Orthonormal pair of measurement kets.
class MeasurementBasis {
public:
    /// Throws std::invalid_argument unless <plus|minus> = 0 within 1e-12.
    MeasurementBasis(PureQubit plus, PureQubit minus, std::string label);

    [[nodiscard]] const PureQubit& plus() const { return plus_; }
    [[nodiscard]] const PureQubit& minus() const { return minus_; }
    [[nodiscard]] const std::string& label() const { return label_; }

private:
    PureQubit plus_;
    PureQubit minus_;
    std::string label_;
};

/// {R, L}.
MeasurementBasis circular_basis();
/// {|alpha>, |alpha_perp>} with |alpha> = cos(alpha/2)|H> + sin(alpha/2)|V>.
MeasurementBasis linear_basis(double alpha);
/// Bob's basis {|theta>, |theta_perp>} = {(psi + psi_perp), (psi - psi_perp)} / sqrt(2).
MeasurementBasis bob_basis(double theta);

}  // namespace gpchan
