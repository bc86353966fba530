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

// Geometric phase of closed paths on the Bloch sphere, computed three ways:
// discrete parallel transport (Pancharatnam/Bargmann products), signed
// spherical area (beta = -Omega/2), and the gauge field / curvature of the
// spherical chart.

#include <cstddef>
#include <span>
#include <vector>

#include "gpchan/kernels.hpp"
#include "gpchan/poincare.hpp"

namespace gpchan {

/// Ordered sequence of states. A closed path repeats its starting ray as the
/// last point (the phase of that last point is free).
class SpherePath {
public:
    /// Throws std::invalid_argument for fewer than 3 points, OrthogonalStates
    /// for a (near-)orthogonal consecutive pair, PathNotClosed when `closed`
    /// is set but the end points are different rays.
    SpherePath(std::vector<PureQubit> points, bool closed, double epsilon = kDefaultOrthogonalityEpsilon);

    [[nodiscard]] const std::vector<PureQubit>& points() const { return points_; }
    [[nodiscard]] bool closed() const { return closed_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] double epsilon() const { return epsilon_; }

    /// Same loop traversed the other way.
    [[nodiscard]] SpherePath reversed() const;

private:
    std::vector<PureQubit> points_;
    bool closed_;
    double epsilon_;
};

/// Circle at colatitude `theta` about `axis`, traversed right-handed about the
/// axis, with `segments` steps (segments + 1 points).
SpherePath latitude_circle(double theta, std::size_t segments, const BlochVector& axis = BlochVector::unit_z());

/// Closed geodesic polygon through `vertices`, each edge split into
/// `samples_per_edge` steps.
SpherePath geodesic_polygon(std::span<const BlochVector> vertices, std::size_t samples_per_edge);

/// States U(k angle / segments)|initial> for the constant rotation about
/// `axis`. Closed when the final state returns to the initial ray.
SpherePath rotation_loop(const PureQubit& initial, const BlochVector& axis, double total_angle,
                         std::size_t segments);

struct GeometricPhase {
    double wrapped;    ///< in (-pi, pi]
    double unwrapped;  ///< accumulated sum; gauge-dependent up to multiples of 2pi
};

/// beta = -sum_k arg<p_k|p_{k+1}> around the closed loop, including the
/// closure step back to the first point. Exactly gauge invariant, and equal to
/// -1/2 the signed area of the geodesic polygon through the points.
GeometricPhase geometric_phase_discrete(const SpherePath& path, kernels::Isa isa = kernels::active_isa());

/// Signed area of the closed path's geodesic polygon, measured on the side of
/// the vertex centroid: positive when the path runs counterclockwise around
/// that side seen from outside the sphere. Reversing the path negates the
/// result. A circle at colatitude theta > pi/2 therefore gives the smaller
/// cap with a minus sign, 2pi(1 - cos theta) - 4pi, which is the same phase.
/// Result in (-4pi, 4pi).
double solid_angle(const SpherePath& path);
/// Same, for an implicitly closed list of unit vertices.
double solid_angle(std::span<const BlochVector> vertices);

/// Wraps into (-pi, pi].
double wrap_phase(double phase);

struct GaugeFieldSample {
    double theta;
    double phi;
    double a_theta;
    double a_phi;
};

/// Gauge field of the chart e^{-i phi}cos(theta/2)|R> + sin(theta/2)|L>:
/// A_theta = 0, A_phi = cos^2(theta/2) / sin(theta). Throws PoleSingularity
/// at theta = 0 or pi, std::invalid_argument outside [0, pi].
GaugeFieldSample gauge_field(double theta, double phi);

/// Radial curl of the gauge field on the unit sphere.
double berry_curvature();

/// -(total_angle/2)(axis . bloch(initial)): the phase from <H> for a constant
/// rotation generator.
double dynamical_phase(const PureQubit& initial, const BlochVector& axis, double total_angle);

}  // namespace gpchan
