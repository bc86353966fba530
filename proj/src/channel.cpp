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

#include "gpchan/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "gpchan/errors.hpp"

namespace gpchan {
namespace {

void require_delay(double d) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
        throw std::invalid_argument("delays must be finite and non-negative");
    }
}

constexpr double kReciprocityTolerance = 1e-9;

bool reciprocal_pair(const PolarizationUnitary& forward, const PolarizationUnitary& backward) {
    return backward.distance(forward.linear_transpose()) <= kReciprocityTolerance;
}

}  // namespace

void OpticalElement::validate() const {
    require_delay(delay_forward);
    require_delay(delay_backward);
}

OpticalElement identity_element() { return {"identity", {}, {}, 0.0, 0.0}; }

OpticalElement waveplate(double retardance, double fast_axis_angle) {
    const double c = std::cos(fast_axis_angle);
    const double s = std::sin(fast_axis_angle);
    const Complex e_fast = std::polar(1.0, -retardance / 2.0);
    const Complex e_slow = std::polar(1.0, retardance / 2.0);
    // R(a) diag(e_fast, e_slow) R(a)^T in the {H, V} basis.
    const PolarizationUnitary::Matrix jones{{{c * c * e_fast + s * s * e_slow, c * s * (e_fast - e_slow)},
                                             {c * s * (e_fast - e_slow), s * s * e_fast + c * c * e_slow}}};
    const auto forward = PolarizationUnitary::from_linear_matrix(jones);
    return {"waveplate", forward, forward.linear_transpose(), 0.0, 0.0};
}

OpticalElement faraday_rotator(double rotation) {
    const auto u = rotation_about_axis(BlochVector::unit_z(), 2.0 * rotation);
    return {"faraday_rotator", u, u, 0.0, 0.0};
}

bool is_reciprocal(const OpticalElement& element) { return reciprocal_pair(element.forward, element.backward); }

Channel::Channel(std::vector<OpticalElement> elements) : elements_(std::move(elements)) {
    for (const auto& e : elements_) e.validate();
}

void Channel::append(OpticalElement element) {
    element.validate();
    elements_.push_back(std::move(element));
}

PolarizationUnitary Channel::forward_unitary() const {
    PolarizationUnitary total;
    for (const auto& e : elements_) total = e.forward * total;
    return total;
}

PolarizationUnitary Channel::backward_unitary() const {
    PolarizationUnitary total;
    for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) total = it->backward * total;
    return total;
}

double Channel::forward_delay() const {
    double d = 0.0;
    for (const auto& e : elements_) d += e.delay_forward;
    return d;
}

double Channel::backward_delay() const {
    double d = 0.0;
    for (const auto& e : elements_) d += e.delay_backward;
    return d;
}

OpticalElement Channel::as_element(std::string name) const {
    return {std::move(name), forward_unitary(), backward_unitary(), forward_delay(), backward_delay()};
}

bool is_reciprocal(const Channel& channel) {
    return reciprocal_pair(channel.forward_unitary(), channel.backward_unitary());
}

void AttackDevice::validate() const {
    if (std::abs(rotation_axis.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("attack rotation axis must have unit norm");
    }
    require_delay(delta_ab);
    require_delay(delta_ba);
}

double attack_beta(double bob_theta) { return -kPi * (1.0 - std::cos(bob_theta)); }

BlochVector attack_eigen_axis(const AttackDevice& device, double bob_theta) {
    const BlochVector local{std::sin(bob_theta), 0.0, std::cos(bob_theta)};
    if ((device.rotation_axis - BlochVector::unit_z()).norm() == 0.0) {
        return local;
    }
    return bloch_vector(rotation_taking_z_to(device.rotation_axis) * state_from_bloch(local));
}

PolarizationUnitary attack_operator(const AttackDevice& device, double bob_theta) {
    device.validate();
    return geometric_phase_gate(attack_eigen_axis(device, bob_theta).normalized(), attack_beta(bob_theta));
}

double propagation_delay(const AttackDevice& device, Direction direction) {
    return direction == Direction::AliceToBob ? device.delta_ab : device.delta_ba;
}

double delay_asymmetry(const AttackDevice& device) { return device.delta_ab - device.delta_ba; }

int circulator_route(int port_in) {
    switch (port_in) {
        case 1:
            return 2;
        case 2:
            return 3;
        case 3:
            return 1;
        default:
            throw InvalidPort("circulator ports are 1, 2 and 3");
    }
}

}  // namespace gpchan
