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

// Directional optical elements and the twin-circulator attack device.

#include <string>
#include <vector>

#include "gpchan/poincare.hpp"

namespace gpchan {

/// Polarization action and delay for each propagation direction. `forward`
/// is Alice -> Bob.
struct OpticalElement {
    std::string name;
    PolarizationUnitary forward;
    PolarizationUnitary backward;
    double delay_forward = 0.0;   ///< seconds
    double delay_backward = 0.0;  ///< seconds

    /// Throws std::invalid_argument for negative or non-finite delays.
    void validate() const;
};

OpticalElement identity_element();

/// Linear retarder with `retardance` between fast and slow axes, fast axis at
/// `fast_axis_angle` from H. Backward action is the linear-basis transpose.
OpticalElement waveplate(double retardance, double fast_axis_angle);

/// Rotates the linear polarization plane by `rotation` in both directions,
/// i.e. a Bloch rotation by 2 * rotation about the R/L axis. The positive
/// sense is right-handed about R, which turns V toward D.
OpticalElement faraday_rotator(double rotation);

/// Jones reciprocity: backward == linear-basis transpose of forward, within
/// 1e-9, global phase included. A phase common to both directions does not
/// change the verdict; a direction-dependent one does.
bool is_reciprocal(const OpticalElement& element);

/// Elements in Alice -> Bob order.
class Channel {
public:
    Channel() = default;
    explicit Channel(std::vector<OpticalElement> elements);

    void append(OpticalElement element);
    [[nodiscard]] const std::vector<OpticalElement>& elements() const { return elements_; }

    /// U_n ... U_1 for light travelling Alice -> Bob.
    [[nodiscard]] PolarizationUnitary forward_unitary() const;
    /// B_1 ... B_n for light travelling Bob -> Alice.
    [[nodiscard]] PolarizationUnitary backward_unitary() const;
    [[nodiscard]] double forward_delay() const;
    [[nodiscard]] double backward_delay() const;

    /// The channel viewed as one element.
    [[nodiscard]] OpticalElement as_element(std::string name = "channel") const;

private:
    std::vector<OpticalElement> elements_;
};

bool is_reciprocal(const Channel& channel);

/// Twin-circulator attack device. The Faraday rotators drive every photon
/// through one full turn about `rotation_axis` (R/L by default); the routing
/// adds direction-dependent delays.
struct AttackDevice {
    BlochVector rotation_axis = BlochVector::unit_z();
    double delta_ab = 0.0;  ///< seconds, Alice -> Bob
    double delta_ba = 0.0;  ///< seconds, Bob -> Alice

    void validate() const;
};

/// beta(theta) = -pi (1 - cos theta).
double attack_beta(double bob_theta);

/// Bloch direction of psi(theta) measured from the device's rotation axis.
BlochVector attack_eigen_axis(const AttackDevice& device, double bob_theta);

/// geometric_phase_gate(attack_eigen_axis(theta), attack_beta(theta)): phase
/// e^{-i beta} on psi(theta), e^{+i beta} on psi_perp(theta).
///
/// This is a family indexed by Bob's basis parameter, not one fixed Jones
/// matrix: a fixed 2pi rotation about one axis is -I for every input. The
/// family is what remains of the loop once its dynamical phase has been
/// compensated, and no particular compensating hardware is assumed.
PolarizationUnitary attack_operator(const AttackDevice& device, double bob_theta);

enum class Direction { AliceToBob, BobToAlice };

double propagation_delay(const AttackDevice& device, Direction direction);

/// delta_ab - delta_ba.
double delay_asymmetry(const AttackDevice& device);

/// Three-port circulator: 1 -> 2, 2 -> 3, 3 -> 1. Throws InvalidPort.
int circulator_route(int port_in);

}  // namespace gpchan
