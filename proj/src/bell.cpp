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

#include "gpchan/bell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpchan {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

TwoQubitState combine(const TwoQubitState& a, const TwoQubitState& b, double sign) {
    TwoQubitState::Amplitudes out{};
    for (std::size_t k = 0; k < 4; ++k) out[k] = (a.amplitudes()[k] + sign * b.amplitudes()[k]) * kInvSqrt2;
    return TwoQubitState(out);
}

}  // namespace

TwoQubitState::TwoQubitState(const Amplitudes& amps) : amps_(amps) {
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    const double n = std::sqrt(n2);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("two-qubit amplitudes must be finite and not all zero");
    }
    for (auto& a : amps_) a /= n;
}

TwoQubitState TwoQubitState::product(const PureQubit& alice, const PureQubit& bob) {
    return TwoQubitState({alice.amp_r() * bob.amp_r(), alice.amp_r() * bob.amp_l(), alice.amp_l() * bob.amp_r(),
                          alice.amp_l() * bob.amp_l()});
}

Complex TwoQubitState::inner(const TwoQubitState& other) const {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) acc += std::conj(amps_[k]) * other.amps_[k];
    return acc;
}

double TwoQubitState::distance(const TwoQubitState& other) const {
    double d = 0.0;
    for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(amps_[k] - other.amps_[k]));
    return d;
}

TwoQubitState bell_state(BellKind kind) {
    const PureQubit h = ket_h();
    const PureQubit v = ket_v();
    switch (kind) {
        case BellKind::PhiPlus:
            return combine(TwoQubitState::product(h, v), TwoQubitState::product(v, h), +1.0);
        case BellKind::PhiMinus:
            return combine(TwoQubitState::product(h, v), TwoQubitState::product(v, h), -1.0);
        case BellKind::PsiPlus:
            return combine(TwoQubitState::product(h, h), TwoQubitState::product(v, v), +1.0);
        case BellKind::PsiMinus:
            return combine(TwoQubitState::product(h, h), TwoQubitState::product(v, v), -1.0);
    }
    throw std::invalid_argument("unknown Bell state");
}

TwoQubitState phi_minus() { return bell_state(BellKind::PhiMinus); }

TwoQubitState apply_to_bob(const TwoQubitState& s, const PolarizationUnitary& u) {
    TwoQubitState::Amplitudes out{};
    for (int a = 0; a < 2; ++a) {
        const auto [r, l] = u.apply(s.amplitude(a, 0), s.amplitude(a, 1));
        out[2 * a] = r;
        out[2 * a + 1] = l;
    }
    return TwoQubitState(out);
}

TwoQubitState apply_to_alice(const TwoQubitState& s, const PolarizationUnitary& u) {
    TwoQubitState::Amplitudes out{};
    for (int b = 0; b < 2; ++b) {
        const auto [r, l] = u.apply(s.amplitude(0, b), s.amplitude(1, b));
        out[b] = r;
        out[2 + b] = l;
    }
    return TwoQubitState(out);
}

Complex joint_amplitude(const TwoQubitState& s, const PureQubit& alice_ket, const PureQubit& bob_ket) {
    const std::array<Complex, 2> a{std::conj(alice_ket.amp_r()), std::conj(alice_ket.amp_l())};
    const std::array<Complex, 2> b{std::conj(bob_ket.amp_r()), std::conj(bob_ket.amp_l())};
    Complex acc = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) acc += a[i] * b[j] * s.amplitude(i, j);
    }
    return acc;
}

double clamp_probability(double p) {
    if (p < -1e-12 || p > 1.0 + 1e-12 || std::isnan(p)) {
        throw std::domain_error("probability out of range");
    }
    return std::clamp(p, 0.0, 1.0);
}

double joint_prob(const TwoQubitState& s, const JointSetting& setting, Outcome outcome) {
    const PureQubit& a = outcome.alice == Sign::Plus ? setting.alice_basis.plus() : setting.alice_basis.minus();
    const PureQubit& b = outcome.bob == Sign::Plus ? setting.bob_basis.plus() : setting.bob_basis.minus();
    return clamp_probability(std::norm(joint_amplitude(s, a, b)));
}

std::array<double, 4> joint_distribution(const TwoQubitState& s, const JointSetting& setting) {
    return {joint_prob(s, setting, {Sign::Plus, Sign::Plus}), joint_prob(s, setting, {Sign::Plus, Sign::Minus}),
            joint_prob(s, setting, {Sign::Minus, Sign::Plus}), joint_prob(s, setting, {Sign::Minus, Sign::Minus})};
}

std::pair<double, double> marginal_prob(const TwoQubitState& s, Party party, const MeasurementBasis& basis) {
    // The other party's basis is irrelevant; any orthonormal pair completes the sum.
    const JointSetting setting = party == Party::Alice ? JointSetting{basis, circular_basis()}
                                                       : JointSetting{circular_basis(), basis};
    const auto d = joint_distribution(s, setting);
    if (party == Party::Alice) {
        return {clamp_probability(d[0] + d[1]), clamp_probability(d[2] + d[3])};
    }
    return {clamp_probability(d[0] + d[2]), clamp_probability(d[1] + d[3])};
}

double closed_form_linear(double alpha) { return clamp_probability(0.25 * (1.0 + std::cos(alpha))); }

double closed_form_circular(double theta, double beta, bool perp) {
    const double term = std::sin(theta) * std::cos(2.0 * beta);
    return clamp_probability(0.25 * (1.0 + (perp ? -term : term)));
}

double closed_form_general(double alpha, double theta, double beta) {
    const auto sq = [](double x) { return x * x; };
    const double half = theta / 2.0;
    const double sin_sum = sq(std::sin(half + beta)) + sq(std::sin(half - beta));
    const double cos_sum = sq(std::cos(half + beta)) + sq(std::cos(half - beta));
    return clamp_probability(0.25 * (sin_sum * sq(std::sin(alpha / 2.0)) + cos_sum * sq(std::cos(alpha / 2.0)) +
                                     std::sin(2.0 * beta) * std::sin(alpha)));
}

}  // namespace gpchan
