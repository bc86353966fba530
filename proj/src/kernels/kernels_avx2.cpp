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

// Built with -mavx2. Nothing in here may run before dispatch.cpp has checked
// that the CPU supports AVX2.

#include <immintrin.h>

#include "gpchan/kernels.hpp"

namespace gpchan::kernels::detail {
namespace {

inline void mulhilo(__m256i m, __m256i x, __m256i& hi, __m256i& lo) {
    const __m256i even = _mm256_mul_epu32(x, m);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
    lo = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
    hi = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

std::uint64_t hsum(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

CellCounts count_categorical_avx2(PhiloxKey key, std::uint32_t stream, std::uint64_t begin, std::uint64_t end,
                                  const CellThresholds& thresholds) {
    const __m256i m0 = _mm256_set1_epi32(static_cast<int>(kPhiloxM0));
    const __m256i m1 = _mm256_set1_epi32(static_cast<int>(kPhiloxM1));
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i stream_v = _mm256_set1_epi32(static_cast<int>(stream));
    const __m256i t0 = _mm256_set1_epi64x(static_cast<long long>(thresholds[0]));
    const __m256i t1 = _mm256_set1_epi64x(static_cast<long long>(thresholds[1]));
    const __m256i t2 = _mm256_set1_epi64x(static_cast<long long>(thresholds[2]));

    __m256i below0 = _mm256_setzero_si256();
    __m256i below1 = _mm256_setzero_si256();
    __m256i below2 = _mm256_setzero_si256();
    CellCounts scalar_part{};

    std::uint64_t i = begin;
    while (end > i && end - i >= 8) {
        const auto lo_index = static_cast<std::uint32_t>(i);
        if (lo_index > 0xFFFFFFFFu - 7u) {
            // The low counter word would carry inside this block.
            const CellCounts c = count_categorical_scalar(key, stream, i, i + 8, thresholds);
            for (std::size_t k = 0; k < 4; ++k) scalar_part[k] += c[k];
            i += 8;
            continue;
        }
        __m256i x0 = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(lo_index)), lane);
        __m256i x1 = _mm256_set1_epi32(static_cast<int>(i >> 32));
        __m256i x2 = stream_v;
        __m256i x3 = _mm256_setzero_si256();
        std::uint32_t k0 = key[0];
        std::uint32_t k1 = key[1];
        for (int round = 0; round < kPhiloxRounds; ++round) {
            if (round > 0) {
                k0 += kPhiloxW0;
                k1 += kPhiloxW1;
            }
            __m256i hi0, lo0, hi1, lo1;
            mulhilo(m0, x0, hi0, lo0);
            mulhilo(m1, x2, hi1, lo1);
            const __m256i n0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), _mm256_set1_epi32(static_cast<int>(k0)));
            const __m256i n2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), _mm256_set1_epi32(static_cast<int>(k1)));
            x0 = n0;
            x1 = lo1;
            x2 = n2;
            x3 = lo0;
        }
        // (x0 << 32 | x1) >> 11 per pair; lane order is irrelevant for counting.
        const __m256i a = _mm256_srli_epi64(_mm256_unpacklo_epi32(x1, x0), 11);
        const __m256i b = _mm256_srli_epi64(_mm256_unpackhi_epi32(x1, x0), 11);
        // cmpgt yields -1 where u < threshold.
        below0 = _mm256_sub_epi64(below0, _mm256_add_epi64(_mm256_cmpgt_epi64(t0, a), _mm256_cmpgt_epi64(t0, b)));
        below1 = _mm256_sub_epi64(below1, _mm256_add_epi64(_mm256_cmpgt_epi64(t1, a), _mm256_cmpgt_epi64(t1, b)));
        below2 = _mm256_sub_epi64(below2, _mm256_add_epi64(_mm256_cmpgt_epi64(t2, a), _mm256_cmpgt_epi64(t2, b)));
        i += 8;
    }

    const std::uint64_t b0 = hsum(below0);
    const std::uint64_t b1 = hsum(below1);
    const std::uint64_t b2 = hsum(below2);
    const std::uint64_t vector_n = (i - begin) - (scalar_part[0] + scalar_part[1] + scalar_part[2] + scalar_part[3]);
    CellCounts out{b0, b1 - b0, b2 - b1, vector_n - b2};
    for (std::size_t k = 0; k < 4; ++k) out[k] += scalar_part[k];
    if (i < end) {
        const CellCounts tail = count_categorical_scalar(key, stream, i, end, thresholds);
        for (std::size_t k = 0; k < 4; ++k) out[k] += tail[k];
    }
    return out;
}

void adjacent_overlaps_avx2(const StateColumns& p, std::span<double> out_re, std::span<double> out_im) {
    const std::size_t n = p.r_re.size();
    if (n < 2) return;
    const std::size_t pairs = n - 1;
    std::size_t k = 0;
    for (; k + 4 <= pairs; k += 4) {
        const __m256d ar = _mm256_loadu_pd(&p.r_re[k]);
        const __m256d ai = _mm256_loadu_pd(&p.r_im[k]);
        const __m256d br = _mm256_loadu_pd(&p.l_re[k]);
        const __m256d bi = _mm256_loadu_pd(&p.l_im[k]);
        const __m256d cr = _mm256_loadu_pd(&p.r_re[k + 1]);
        const __m256d ci = _mm256_loadu_pd(&p.r_im[k + 1]);
        const __m256d dr = _mm256_loadu_pd(&p.l_re[k + 1]);
        const __m256d di = _mm256_loadu_pd(&p.l_im[k + 1]);
        __m256d re = _mm256_mul_pd(ar, cr);
        re = _mm256_add_pd(re, _mm256_mul_pd(ai, ci));
        re = _mm256_add_pd(re, _mm256_mul_pd(br, dr));
        re = _mm256_add_pd(re, _mm256_mul_pd(bi, di));
        __m256d im = _mm256_mul_pd(ar, ci);
        im = _mm256_sub_pd(im, _mm256_mul_pd(ai, cr));
        im = _mm256_add_pd(im, _mm256_mul_pd(br, di));
        im = _mm256_sub_pd(im, _mm256_mul_pd(bi, dr));
        _mm256_storeu_pd(&out_re[k], re);
        _mm256_storeu_pd(&out_im[k], im);
    }
    if (k < pairs) {
        const StateColumns tail{p.r_re.subspan(k), p.r_im.subspan(k), p.l_re.subspan(k), p.l_im.subspan(k)};
        adjacent_overlaps_scalar(tail, out_re.subspan(k), out_im.subspan(k));
    }
}

}  // namespace gpchan::kernels::detail
