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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gpchan/kernels.hpp"

namespace gpchan::kernels {

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(GPCHAN_HAVE_AVX2_TU)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() {
    static const Isa chosen = [] {
        const char* env = std::getenv("GPCHAN_KERNEL");
        if (env != nullptr && std::string(env) == "scalar") {
            return Isa::Scalar;
        }
        return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return chosen;
}

namespace {
void require(Isa isa) {
    if (!isa_available(isa)) {
        throw std::runtime_error("kernel variant not available: " + std::string(isa_name(isa)));
    }
}
}  // namespace

CellCounts count_categorical(PhiloxKey key, std::uint32_t stream, std::uint64_t begin, std::uint64_t end,
                             const CellThresholds& thresholds, Isa isa) {
    require(isa);
#if defined(GPCHAN_HAVE_AVX2_TU)
    if (isa == Isa::Avx2) {
        return detail::count_categorical_avx2(key, stream, begin, end, thresholds);
    }
#endif
    return detail::count_categorical_scalar(key, stream, begin, end, thresholds);
}

void adjacent_overlaps(const StateColumns& points, std::span<double> out_re, std::span<double> out_im, Isa isa) {
    require(isa);
    const std::size_t n = points.r_re.size();
    if (points.r_im.size() != n || points.l_re.size() != n || points.l_im.size() != n) {
        throw std::invalid_argument("state columns differ in length");
    }
    const std::size_t pairs = n > 0 ? n - 1 : 0;
    if (out_re.size() < pairs || out_im.size() < pairs) {
        throw std::invalid_argument("overlap output too short");
    }
#if defined(GPCHAN_HAVE_AVX2_TU)
    if (isa == Isa::Avx2) {
        detail::adjacent_overlaps_avx2(points, out_re, out_im);
        return;
    }
#endif
    detail::adjacent_overlaps_scalar(points, out_re, out_im);
}

}  // namespace gpchan::kernels
