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

#ifndef MSING_GENERATOR_HPP
#define MSING_GENERATOR_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace msing {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

enum class Sign : std::int8_t { minus = -1, none = 0, plus = 1 };

// The 16 generators of the multisingularity semigroup, in the fixed order
// used everywhere for iteration, exponent layout and tie-breaking.
enum class Generator : std::uint8_t {
    A1,
    A2,
    A3p,
    A3m,
    A4,
    A5p,
    A5m,
    A6,
    D4p,
    D4m,
    D5p,
    D5m,
    D6p,
    D6m,
    E6p,
    E6m,
};

inline constexpr std::size_t generator_count = 16;

struct GeneratorInfo {
    Family family;
    int mu;
    Sign sign;
    int codim;
    std::string_view name;
};

const GeneratorInfo &info(Generator g) noexcept;

inline std::size_t index(Generator g) noexcept
{
    return static_cast<std::size_t>(g);
}

inline Generator generator_at(std::size_t i) noexcept
{
    return static_cast<Generator>(i);
}

inline int codim(Generator g) noexcept
{
    return info(g).codim;
}

// All generators in the fixed order.
const std::array<Generator, generator_count> &all_generators() noexcept;

// Codimension weights laid out by generator index; consumed by the
// monomial kernels.
const std::array<std::uint8_t, generator_count> &codim_weights() noexcept;

// Lookup by family, index and sign; empty when no such generator exists
// (e.g. A7, unsigned E6, signed A2).
std::optional<Generator> find_generator(Family family, int mu, Sign sign) noexcept;

// True when the family/index pair carries a sign (A3, A5, D4, D5, D6, E6).
bool is_signed_pair(Family family, int mu) noexcept;

// The generator with the opposite sign; unsigned generators map to themselves.
Generator flip_sign(Generator g) noexcept;

// Sign-forgetting used for caustic germ notation: A3, A5, D5 and E6 lose
// their sign (represented by the plus member), D4 and D6 keep it.
bool is_collapsible(Generator g) noexcept;
Generator collapse_representative(Generator g) noexcept;

} // namespace msing

#endif
