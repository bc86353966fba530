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

// Alice (x) Bob polarization pairs and their coincidence statistics.

#include <array>
#include <utility>

#include "gpchan/poincare.hpp"

namespace gpchan {

/// Amplitudes over {R, L} (x) {R, L}, index 2 * alice + bob.
class TwoQubitState {
public:
    using Amplitudes = std::array<Complex, 4>;

    /// Normalizes; throws std::invalid_argument for the zero vector.
    explicit TwoQubitState(const Amplitudes& amps);

    static TwoQubitState product(const PureQubit& alice, const PureQubit& bob);

    [[nodiscard]] const Amplitudes& amplitudes() const { return amps_; }
    [[nodiscard]] Complex amplitude(int alice, int bob) const { return amps_[2 * alice + bob]; }

    /// <this|other>.
    [[nodiscard]] Complex inner(const TwoQubitState& other) const;
    /// max_k |a_k - b_k|.
    [[nodiscard]] double distance(const TwoQubitState& other) const;

private:
    Amplitudes amps_;
};

/// (|HV> - |VH>) / sqrt(2).
TwoQubitState phi_minus();

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Bell states in the {H, V} basis: Phi+- = (|HV> +- |VH>)/sqrt2 (this
/// labelling follows phi_minus), Psi+- = (|HH> +- |VV>)/sqrt2.
TwoQubitState bell_state(BellKind kind);

/// (I (x) U)|s>.
TwoQubitState apply_to_bob(const TwoQubitState& s, const PolarizationUnitary& u);
/// (U (x) I)|s>.
TwoQubitState apply_to_alice(const TwoQubitState& s, const PolarizationUnitary& u);

struct JointSetting {
    MeasurementBasis alice_basis;
    MeasurementBasis bob_basis;
};

enum class Sign { Plus, Minus };

struct Outcome {
    Sign alice;
    Sign bob;
};

/// <a|<b|s>.
Complex joint_amplitude(const TwoQubitState& s, const PureQubit& alice_ket, const PureQubit& bob_ket);

double joint_prob(const TwoQubitState& s, const JointSetting& setting, Outcome outcome);

/// Outcome probabilities in the fixed cell order (+,+), (+,-), (-,+), (-,-).
std::array<double, 4> joint_distribution(const TwoQubitState& s, const JointSetting& setting);

enum class Party { Alice, Bob };

/// (p_plus, p_minus) for one party, summed over the other's outcomes.
std::pair<double, double> marginal_prob(const TwoQubitState& s, Party party, const MeasurementBasis& basis);

/// Values in [-1e-12, 0) become 0 and values in (1, 1 + 1e-12] become 1;
/// anything further out throws std::domain_error.
double clamp_probability(double p);

/// 1/4 (1 + cos alpha).
double closed_form_linear(double alpha);

/// 1/4 (1 + sin theta cos 2beta), or with a minus sign for the perpendicular
/// outcome.
double closed_form_circular(double theta, double beta, bool perp);

/// 1/4 {(sin^2(theta/2 + beta) + sin^2(theta/2 - beta)) sin^2(alpha/2)
///    + (cos^2(theta/2 + beta) + cos^2(theta/2 - beta)) cos^2(alpha/2)
///    + sin 2beta sin alpha}
double closed_form_general(double alpha, double theta, double beta);

}  // namespace gpchan
