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

// Data-parallel inner loops. Each kernel has a scalar reference and, on
// x86-64, an AVX2 variant chosen at runtime. Variants are required to agree
// bit for bit.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "gpchan/philox.hpp"
#include "gpchan/poincare.hpp"

namespace gpchan::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// True if this build carries the variant and the CPU can run it.
bool isa_available(Isa isa);

/// Best available ISA, unless GPCHAN_KERNEL=scalar is set in the environment.
Isa active_isa();

/// Inverse-CDF thresholds on the 53-bit uniform grid. A draw u lands in cell
/// k = #{j : u >= thresholds[j]}; cells with zero probability have equal
/// consecutive thresholds and are never hit.
using CellThresholds = std::array<std::uint64_t, 3>;

CellThresholds thresholds_from_probabilities(const std::array<double, 4>& probabilities);

using CellCounts = std::array<std::uint64_t, 4>;

/// Counts categorical draws for pair indices [begin, end) of `stream`.
CellCounts count_categorical(PhiloxKey key, std::uint32_t stream, std::uint64_t begin, std::uint64_t end,
                             const CellThresholds& thresholds, Isa isa);

/// Structure-of-arrays view of a sequence of states.
struct StateColumns {
    std::span<const double> r_re, r_im, l_re, l_im;
};

/// out[k] = <p_k | p_{k+1}> for k in [0, n-1). `out_re`/`out_im` need n-1 slots.
void adjacent_overlaps(const StateColumns& points, std::span<double> out_re, std::span<double> out_im, Isa isa);

namespace detail {
CellCounts count_categorical_scalar(PhiloxKey key, std::uint32_t stream, std::uint64_t begin, std::uint64_t end,
                                    const CellThresholds& thresholds);
void adjacent_overlaps_scalar(const StateColumns& points, std::span<double> out_re, std::span<double> out_im);
#if defined(GPCHAN_HAVE_AVX2_TU)
CellCounts count_categorical_avx2(PhiloxKey key, std::uint32_t stream, std::uint64_t begin, std::uint64_t end,
                                  const CellThresholds& thresholds);
void adjacent_overlaps_avx2(const StateColumns& points, std::span<double> out_re, std::span<double> out_im);
#endif
}  // namespace detail

}  // namespace gpchan::kernels
