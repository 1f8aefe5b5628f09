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

#ifndef MSING_KERNELS_HPP
#define MSING_KERNELS_HPP

// Batch kernels over packed exponent vectors (16 x uint8, one byte per
// generator, 16-byte aligned). The scalar variant is the reference; the
// SIMD variants must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace msing::kernels {

inline constexpr std::size_t lane_bytes = 16;

// Largest representable exponent; 255 is the saturation marker.
inline constexpr int max_exponent = 254;

enum class Isa { scalar, sse2, avx2, neon };

struct MonomialKernels {
    Isa isa;
    std::string_view name;
    // out[i] = base + terms[i] (exponent-wise). keep[i] is 1 iff the sum did
    // not overflow and the product has codim <= max_codim and A1-degree
    // <= max_a1. Returns true iff any product overflowed.
    bool (*multiply_batch)(const std::uint8_t *base, const std::uint8_t *terms, std::size_t count,
                           int max_codim, int max_a1, std::uint8_t *out, std::uint8_t *keep);
    // codims[i] = weighted exponent sum of terms[i].
    void (*codim_batch)(const std::uint8_t *terms, std::size_t count, std::int32_t *codims);
};

std::string_view to_string(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view text) noexcept;

// Compiled in and supported by the running CPU.
bool available(Isa isa) noexcept;
std::vector<Isa> available_isas();
Isa best_available() noexcept;

// Throws std::invalid_argument when the variant is not available.
const MonomialKernels &get(Isa isa);

// The process-wide selection; defaults to best_available().
const MonomialKernels &active() noexcept;
void select(Isa isa);

namespace detail {
const MonomialKernels &scalar_kernels() noexcept;
// Null when not compiled for this target.
const MonomialKernels *sse2_kernels() noexcept;
const MonomialKernels *avx2_kernels() noexcept;
const MonomialKernels *neon_kernels() noexcept;
bool cpu_has_avx2() noexcept;
} // namespace detail

} // namespace msing::kernels

#endif
