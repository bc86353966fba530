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

#include "gpchan/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpchan::kernels {

CellThresholds thresholds_from_probabilities(const std::array<double, 4>& probabilities) {
    constexpr double kScale = 9007199254740992.0;  // 2^53
    constexpr std::uint64_t kTop = std::uint64_t{1} << 53;
    CellThresholds out{};
    double cumulative = 0.0;
    std::uint64_t previous = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double p = probabilities[k];
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("cell probabilities must be finite and non-negative");
        }
        cumulative += p;
        const double scaled = std::min(cumulative, 1.0) * kScale;
        auto t = static_cast<std::uint64_t>(std::llround(scaled));
        t = std::clamp(t, previous, kTop);
        out[k] = t;
        previous = t;
    }
    return out;
}

namespace detail {

CellCounts count_categorical_scalar(PhiloxKey key, std::uint32_t stream, std::uint64_t begin, std::uint64_t end,
                                    const CellThresholds& thresholds) {
    std::array<std::uint64_t, 3> below{};
    for (std::uint64_t i = begin; i < end; ++i) {
        const std::uint64_t u = philox_u53(key, stream, i);
        below[0] += u < thresholds[0];
        below[1] += u < thresholds[1];
        below[2] += u < thresholds[2];
    }
    const std::uint64_t n = end > begin ? end - begin : 0;
    return {below[0], below[1] - below[0], below[2] - below[1], n - below[2]};
}

void adjacent_overlaps_scalar(const StateColumns& p, std::span<double> out_re, std::span<double> out_im) {
    const std::size_t n = p.r_re.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        double re = p.r_re[k] * p.r_re[k + 1];
        re = re + p.r_im[k] * p.r_im[k + 1];
        re = re + p.l_re[k] * p.l_re[k + 1];
        re = re + p.l_im[k] * p.l_im[k + 1];
        double im = p.r_re[k] * p.r_im[k + 1];
        im = im - p.r_im[k] * p.r_re[k + 1];
        im = im + p.l_re[k] * p.l_im[k + 1];
        im = im - p.l_im[k] * p.l_re[k + 1];
        out_re[k] = re;
        out_im[k] = im;
    }
}

}  // namespace detail
}  // namespace gpchan::kernels
