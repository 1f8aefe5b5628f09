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

namespace msing::kernels::detail {

namespace {

bool multiply_batch(const std::uint8_t *base, const std::uint8_t *terms, std::size_t count, int max_codim,
                    int max_a1, std::uint8_t *out, std::uint8_t *keep)
{
    const auto &w = codim_weights();
    bool overflow = false;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint8_t *t = terms + i * lane_bytes;
        std::uint8_t *o = out + i * lane_bytes;
        bool lane_overflow = false;
        int codim = 0;
        for (std::size_t j = 0; j < lane_bytes; ++j) {
            int e = int(base[j]) + int(t[j]);
            if (e > max_exponent) {
                lane_overflow = true;
                e = 255;
            }
            o[j] = static_cast<std::uint8_t>(e);
            codim += int(w[j]) * e;
        }
        overflow = overflow || lane_overflow;
        keep[i] = (!lane_overflow && codim <= max_codim && int(o[0]) <= max_a1) ? 1 : 0;
    }
    return overflow;
}

void codim_batch(const std::uint8_t *terms, std::size_t count, std::int32_t *codims)
{
    const auto &w = codim_weights();
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint8_t *t = terms + i * lane_bytes;
        std::int32_t c = 0;
        for (std::size_t j = 0; j < lane_bytes; ++j) {
            c += std::int32_t(w[j]) * std::int32_t(t[j]);
        }
        codims[i] = c;
    }
}

constexpr MonomialKernels table{Isa::scalar, "scalar", &multiply_batch, &codim_batch};

} // namespace

const MonomialKernels &scalar_kernels() noexcept
{
    return table;
}

} // namespace msing::kernels::detail
