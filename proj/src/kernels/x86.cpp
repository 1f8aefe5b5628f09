// Copyright 2026 The msing Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <msing/generator.hpp>
#include <msing/kernels.hpp>

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace msing::kernels::detail {

namespace {

// Codimension weights widened to 16 bits, low and high halves.
__attribute__((target("sse2"))) inline __m128i weights_lo()
{
    const auto &w = codim_weights();
    return _mm_setr_epi16(w[0], w[1], w[2], w[3], w[4], w[5], w[6], w[7]);
}

__attribute__((target("sse2"))) inline __m128i weights_hi()
{
    const auto &w = codim_weights();
    return _mm_setr_epi16(w[8], w[9], w[10], w[11], w[12], w[13], w[14], w[15]);
}

__attribute__((target("sse2"))) inline std::int32_t codim_sse2(__m128i v, __m128i wlo, __m128i whi)
{
    const __m128i zero = _mm_setzero_si128();
    const __m128i lo = _mm_madd_epi16(_mm_unpacklo_epi8(v, zero), wlo);
    const __m128i hi = _mm_madd_epi16(_mm_unpackhi_epi8(v, zero), whi);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
    return _mm_cvtsi128_si32(s);
}

__attribute__((target("sse2"))) bool multiply_batch_sse2(const std::uint8_t *base, const std::uint8_t *terms,
                                                        std::size_t count, int max_codim, int max_a1,
                                                        std::uint8_t *out, std::uint8_t *keep)
{
    const __m128i b = _mm_loadu_si128(reinterpret_cast<const __m128i *>(base));
    const __m128i sat = _mm_set1_epi8(static_cast<char>(0xff));
    const __m128i wlo = weights_lo();
    const __m128i whi = weights_hi();
    bool overflow = false;
    for (std::size_t i = 0; i < count; ++i) {
        const __m128i t = _mm_loadu_si128(reinterpret_cast<const __m128i *>(terms + i * lane_bytes));
        const __m128i p = _mm_adds_epu8(b, t);
        _mm_storeu_si128(reinterpret_cast<__m128i *>(out + i * lane_bytes), p);
        const bool lane_overflow = _mm_movemask_epi8(_mm_cmpeq_epi8(p, sat)) != 0;
        overflow = overflow || lane_overflow;
        const int a1 = _mm_cvtsi128_si32(p) & 0xff;
        keep[i] = (!lane_overflow && codim_sse2(p, wlo, whi) <= max_codim && a1 <= max_a1) ? 1 : 0;
    }
    return overflow;
}

__attribute__((target("sse2"))) void codim_batch_sse2(const std::uint8_t *terms, std::size_t count,
                                                     std::int32_t *codims)
{
    const __m128i wlo = weights_lo();
    const __m128i whi = weights_hi();
    for (std::size_t i = 0; i < count; ++i) {
        const __m128i t = _mm_loadu_si128(reinterpret_cast<const __m128i *>(terms + i * lane_bytes));
        codims[i] = codim_sse2(t, wlo, whi);
    }
}

// AVX2: two exponent vectors per 256-bit register, one per 128-bit lane.

__attribute__((target("avx2"))) inline __m256i weights_lo_avx2()
{
    const auto &w = codim_weights();
    return _mm256_setr_epi16(w[0], w[1], w[2], w[3], w[4], w[5], w[6], w[7], w[0], w[1], w[2], w[3], w[4], w[5],
                             w[6], w[7]);
}

__attribute__((target("avx2"))) inline __m256i weights_hi_avx2()
{
    const auto &w = codim_weights();
    return _mm256_setr_epi16(w[8], w[9], w[10], w[11], w[12], w[13], w[14], w[15], w[8], w[9], w[10], w[11],
                             w[12], w[13], w[14], w[15]);
}

// Per-lane codims of the two vectors in v: returned in elements 0 and 4.
__attribute__((target("avx2"))) inline __m256i codim_pair_avx2(__m256i v, __m256i wlo, __m256i whi)
{
    const __m256i zero = _mm256_setzero_si256();
    const __m256i lo = _mm256_madd_epi16(_mm256_unpacklo_epi8(v, zero), wlo);
    const __m256i hi = _mm256_madd_epi16(_mm256_unpackhi_epi8(v, zero), whi);
    __m256i s = _mm256_add_epi32(lo, hi);
    s = _mm256_hadd_epi32(s, s);
    s = _mm256_hadd_epi32(s, s);
    return s;
}

__attribute__((target("avx2"))) bool multiply_batch_avx2(const std::uint8_t *base, const std::uint8_t *terms,
                                                        std::size_t count, int max_codim, int max_a1,
                                                        std::uint8_t *out, std::uint8_t *keep)
{
    const __m256i b = _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i *>(base)));
    const __m256i sat = _mm256_set1_epi8(static_cast<char>(0xff));
    const __m256i wlo = weights_lo_avx2();
    const __m256i whi = weights_hi_avx2();
    bool overflow = false;
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(terms + i * lane_bytes));
        const __m256i p = _mm256_adds_epu8(b, t);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + i * lane_bytes), p);
        const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(p, sat)));
        const bool ov0 = (mask & 0xffffu) != 0;
        const bool ov1 = (mask >> 16) != 0;
        overflow = overflow || ov0 || ov1;
        const __m256i c = codim_pair_avx2(p, wlo, whi);
        const int c0 = _mm256_extract_epi32(c, 0);
        const int c1 = _mm256_extract_epi32(c, 4);
        const int a0 = _mm256_extract_epi8(p, 0) & 0xff;
        const int a1 = _mm256_extract_epi8(p, 16) & 0xff;
        keep[i] = (!ov0 && c0 <= max_codim && a0 <= max_a1) ? 1 : 0;
        keep[i + 1] = (!ov1 && c1 <= max_codim && a1 <= max_a1) ? 1 : 0;
    }
    if (i < count) {
        const bool tail = multiply_batch_sse2(base, terms + i * lane_bytes, count - i, max_codim, max_a1,
                                              out + i * lane_bytes, keep + i);
        overflow = overflow || tail;
    }
    return overflow;
}

__attribute__((target("avx2"))) void codim_batch_avx2(const std::uint8_t *terms, std::size_t count,
                                                     std::int32_t *codims)
{
    const __m256i wlo = weights_lo_avx2();
    const __m256i whi = weights_hi_avx2();
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(terms + i * lane_bytes));
        const __m256i c = codim_pair_avx2(t, wlo, whi);
        codims[i] = _mm256_extract_epi32(c, 0);
        codims[i + 1] = _mm256_extract_epi32(c, 4);
    }
    if (i < count) {
        codim_batch_sse2(terms + i * lane_bytes, count - i, codims + i);
    }
}

constexpr MonomialKernels sse2_table{Isa::sse2, "sse2", &multiply_batch_sse2, &codim_batch_sse2};
constexpr MonomialKernels avx2_table{Isa::avx2, "avx2", &multiply_batch_avx2, &codim_batch_avx2};

} // namespace

const MonomialKernels *sse2_kernels() noexcept
{
    return &sse2_table;
}

const MonomialKernels *avx2_kernels() noexcept
{
    return &avx2_table;
}

bool cpu_has_avx2() noexcept
{
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
}

} // namespace msing::kernels::detail

#else

namespace msing::kernels::detail {

const MonomialKernels *sse2_kernels() noexcept
{
    return nullptr;
}

const MonomialKernels *avx2_kernels() noexcept
{
    return nullptr;
}

bool cpu_has_avx2() noexcept
{
    return false;
}

} // namespace msing::kernels::detail

#endif
