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

#if defined(__aarch64__)

#include <arm_neon.h>

namespace msing::kernels::detail {

namespace {

inline std::int32_t codim_neon(uint8x16_t v, uint8x8_t wlo, uint8x8_t whi)
{
    const uint16x8_t lo = vmull_u8(vget_low_u8(v), wlo);
    const uint16x8_t hi = vmull_u8(vget_high_u8(v), whi);
    return static_cast<std::int32_t>(vaddvq_u32(vaddq_u32(vpaddlq_u16(lo), vpaddlq_u16(hi))));
}

bool multiply_batch_neon(const std::uint8_t *base, const std::uint8_t *terms, std::size_t count, int max_codim,
                         int max_a1, std::uint8_t *out, std::uint8_t *keep)
{
    const uint8x16_t w = vld1q_u8(codim_weights().data());
    const uint8x8_t wlo = vget_low_u8(w);
    const uint8x8_t whi = vget_high_u8(w);
    const uint8x16_t b = vld1q_u8(base);
    const uint8x16_t sat = vdupq_n_u8(0xff);
    bool overflow = false;
    for (std::size_t i = 0; i < count; ++i) {
        const uint8x16_t p = vqaddq_u8(b, vld1q_u8(terms + i * lane_bytes));
        vst1q_u8(out + i * lane_bytes, p);
        const bool lane_overflow = vmaxvq_u8(vceqq_u8(p, sat)) != 0;
        overflow = overflow || lane_overflow;
        const int a1 = vgetq_lane_u8(p, 0);
        keep[i] = (!lane_overflow && codim_neon(p, wlo, whi) <= max_codim && a1 <= max_a1) ? 1 : 0;
    }
    return overflow;
}

void codim_batch_neon(const std::uint8_t *terms, std::size_t count, std::int32_t *codims)
{
    const uint8x16_t w = vld1q_u8(codim_weights().data());
    const uint8x8_t wlo = vget_low_u8(w);
    const uint8x8_t whi = vget_high_u8(w);
    for (std::size_t i = 0; i < count; ++i) {
        codims[i] = codim_neon(vld1q_u8(terms + i * lane_bytes), wlo, whi);
    }
}

constexpr MonomialKernels neon_table{Isa::neon, "neon", &multiply_batch_neon, &codim_batch_neon};

} // namespace

const MonomialKernels *neon_kernels() noexcept
{
    return &neon_table;
}

} // namespace msing::kernels::detail

#else

namespace msing::kernels::detail {

const MonomialKernels *neon_kernels() noexcept
{
    return nullptr;
}

} // namespace msing::kernels::detail

#endif
