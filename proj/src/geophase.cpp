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

#include "gpchan/geophase.hpp"

#include <cmath>
#include <stdexcept>

#include "gpchan/errors.hpp"

namespace gpchan {
namespace {

double angle_between(const BlochVector& a, const BlochVector& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

// Signed area of the spherical triangle (apex, a, b) by l'Huilier's formula.
double signed_triangle_area(const BlochVector& apex, const BlochVector& a, const BlochVector& b) {
    const double side_ab = angle_between(a, b);
    const double side_apex_b = angle_between(apex, b);
    const double side_apex_a = angle_between(apex, a);
    const double s = 0.5 * (side_ab + side_apex_b + side_apex_a);
    const double product = std::tan(0.5 * s) * std::tan(0.5 * (s - side_ab)) * std::tan(0.5 * (s - side_apex_b)) *
                           std::tan(0.5 * (s - side_apex_a));
    const double excess = 4.0 * std::atan(std::sqrt(std::max(0.0, product)));
    const double orientation = apex.dot(a.cross(b));
    return orientation >= 0.0 ? excess : -excess;
}

BlochVector slerp(const BlochVector& a, const BlochVector& b, double t) {
    const double omega = angle_between(a, b);
    if (omega < 1e-15) return a;
    const double so = std::sin(omega);
    return (a * (std::sin((1.0 - t) * omega) / so) + b * (std::sin(t * omega) / so)).normalized();
}

}  // namespace

SpherePath::SpherePath(std::vector<PureQubit> points, bool closed, double epsilon)
    : points_(std::move(points)), closed_(closed), epsilon_(epsilon) {
    if (points_.size() < 3) {
        throw std::invalid_argument("a sphere path needs at least 3 points");
    }
    for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
        if (std::abs(points_[k].inner(points_[k + 1])) <= epsilon_) {
            throw OrthogonalStates("consecutive path points are orthogonal");
        }
    }
    if (closed_ && std::abs(std::abs(points_.front().inner(points_.back())) - 1.0) > 1e-9) {
        throw PathNotClosed("first and last points are different rays");
    }
}

SpherePath SpherePath::reversed() const {
    return {std::vector<PureQubit>(points_.rbegin(), points_.rend()), closed_, epsilon_};
}

SpherePath latitude_circle(double theta, std::size_t segments, const BlochVector& axis) {
    if (segments < 2) {
        throw std::invalid_argument("latitude circle needs at least 2 segments");
    }
    const PolarizationUnitary frame = rotation_taking_z_to(axis);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    std::vector<PureQubit> points;
    points.reserve(segments + 1);
    for (std::size_t k = 0; k <= segments; ++k) {
        const double phi = k == segments ? 0.0 : 2.0 * kPi * static_cast<double>(k) / static_cast<double>(segments);
        points.push_back(frame * PureQubit::from_amplitudes(c, std::polar(s, phi)));
    }
    return {std::move(points), true};
}

SpherePath geodesic_polygon(std::span<const BlochVector> vertices, std::size_t samples_per_edge) {
    if (vertices.size() < 3 || samples_per_edge < 1) {
        throw std::invalid_argument("geodesic polygon needs 3 vertices and at least one sample per edge");
    }
    std::vector<PureQubit> points;
    points.reserve(vertices.size() * samples_per_edge + 1);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const BlochVector a = vertices[v].normalized();
        const BlochVector b = vertices[(v + 1) % vertices.size()].normalized();
        for (std::size_t k = 0; k < samples_per_edge; ++k) {
            points.push_back(state_from_bloch(slerp(a, b, static_cast<double>(k) / static_cast<double>(samples_per_edge))));
        }
    }
    points.push_back(points.front());
    return {std::move(points), true};
}

SpherePath rotation_loop(const PureQubit& initial, const BlochVector& axis, double total_angle,
                         std::size_t segments) {
    if (segments < 2) {
        throw std::invalid_argument("rotation loop needs at least 2 segments");
    }
    std::vector<PureQubit> points;
    points.reserve(segments + 1);
    for (std::size_t k = 0; k <= segments; ++k) {
        const double angle = total_angle * static_cast<double>(k) / static_cast<double>(segments);
        points.push_back(rotation_about_axis(axis, angle) * initial);
    }
    const bool closed = std::abs(std::abs(points.front().inner(points.back())) - 1.0) <= 1e-9;
    return {std::move(points), closed};
}

double wrap_phase(double phase) {
    double w = std::remainder(phase, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

GeometricPhase geometric_phase_discrete(const SpherePath& path, kernels::Isa isa) {
    if (!path.closed()) {
        throw PathNotClosed("geometric phase needs a closed path");
    }
    const auto& pts = path.points();
    const std::size_t n = pts.size();
    std::vector<double> r_re(n), r_im(n), l_re(n), l_im(n);
    for (std::size_t k = 0; k < n; ++k) {
        r_re[k] = pts[k].amp_r().real();
        r_im[k] = pts[k].amp_r().imag();
        l_re[k] = pts[k].amp_l().real();
        l_im[k] = pts[k].amp_l().imag();
    }
    std::vector<double> ov_re(n - 1), ov_im(n - 1);
    kernels::adjacent_overlaps({r_re, r_im, l_re, l_im}, ov_re, ov_im, isa);

    double accumulated = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Complex overlap{ov_re[k], ov_im[k]};
        if (std::abs(overlap) <= path.epsilon()) {
            throw OrthogonalStates("consecutive path points are orthogonal");
        }
        accumulated -= std::arg(overlap);
    }
    // Closure: the last point is the first ray with a possibly different phase.
    accumulated -= std::arg(pts.back().inner(pts.front()));
    return {wrap_phase(accumulated), accumulated};
}

double solid_angle(std::span<const BlochVector> vertices) {
    std::vector<BlochVector> loop;
    loop.reserve(vertices.size());
    for (const auto& v : vertices) {
        const BlochVector u = v.normalized();
        if (loop.empty() || (u - loop.back()).norm() > 1e-12) {
            loop.push_back(u);
        }
    }
    while (loop.size() > 1 && (loop.back() - loop.front()).norm() <= 1e-12) {
        loop.pop_back();
    }
    if (loop.size() < 3) {
        throw DegeneratePolygon("fewer than 3 distinct vertices");
    }

    BlochVector vector_area{0.0, 0.0, 0.0};
    BlochVector centroid{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < loop.size(); ++k) {
        vector_area = vector_area + loop[k].cross(loop[(k + 1) % loop.size()]);
        centroid = centroid + loop[k];
    }
    // Fanning from the centroid direction makes the result odd under
    // reversal. Loops whose centroid vanishes (great circles) fall back to the
    // vector-area direction.
    const double count = static_cast<double>(loop.size());
    BlochVector apex;
    if (centroid.norm() / count > 1e-9) {
        apex = centroid.normalized();
    } else if (vector_area.norm() / count > 1e-12) {
        apex = vector_area.normalized();
    } else {
        throw DegeneratePolygon("polygon has no interior direction");
    }

    double area = 0.0;
    for (std::size_t k = 0; k < loop.size(); ++k) {
        area += signed_triangle_area(apex, loop[k], loop[(k + 1) % loop.size()]);
    }
    return area;
}

double solid_angle(const SpherePath& path) {
    if (!path.closed()) {
        throw PathNotClosed("solid angle needs a closed path");
    }
    std::vector<BlochVector> vertices;
    vertices.reserve(path.size());
    for (const auto& p : path.points()) {
        vertices.push_back(bloch_vector(p));
    }
    return solid_angle(vertices);
}

GaugeFieldSample gauge_field(double theta, double phi) {
    if (theta == 0.0 || theta == kPi) {
        throw PoleSingularity("gauge field is singular at the poles");
    }
    if (!(theta > 0.0 && theta < kPi)) {
        throw std::invalid_argument("theta must lie in (0, pi)");
    }
    const double c = std::cos(theta / 2.0);
    return {theta, phi, 0.0, c * c / std::sin(theta)};
}

double berry_curvature() { return -0.5; }

double dynamical_phase(const PureQubit& initial, const BlochVector& axis, double total_angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("rotation axis must have unit norm");
    }
    return -0.5 * total_angle * axis.dot(bloch_vector(initial));
}

}  // namespace gpchan
