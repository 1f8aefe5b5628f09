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

namespace msing {

namespace {

constexpr std::array<GeneratorInfo, generator_count> table{{
    {Family::A, 1, Sign::none, 0, "A1"},
    {Family::A, 2, Sign::none, 1, "A2"},
    {Family::A, 3, Sign::plus, 2, "A3+"},
    {Family::A, 3, Sign::minus, 2, "A3-"},
    {Family::A, 4, Sign::none, 3, "A4"},
    {Family::A, 5, Sign::plus, 4, "A5+"},
    {Family::A, 5, Sign::minus, 4, "A5-"},
    {Family::A, 6, Sign::none, 5, "A6"},
    {Family::D, 4, Sign::plus, 3, "D4+"},
    {Family::D, 4, Sign::minus, 3, "D4-"},
    {Family::D, 5, Sign::plus, 4, "D5+"},
    {Family::D, 5, Sign::minus, 4, "D5-"},
    {Family::D, 6, Sign::plus, 5, "D6+"},
    {Family::D, 6, Sign::minus, 5, "D6-"},
    {Family::E, 6, Sign::plus, 5, "E6+"},
    {Family::E, 6, Sign::minus, 5, "E6-"},
}};

constexpr std::array<Generator, generator_count> make_all()
{
    std::array<Generator, generator_count> out{};
    for (std::size_t i = 0; i < generator_count; ++i) {
        out[i] = static_cast<Generator>(i);
    }
    return out;
}

constexpr std::array<std::uint8_t, generator_count> make_weights()
{
    std::array<std::uint8_t, generator_count> out{};
    for (std::size_t i = 0; i < generator_count; ++i) {
        out[i] = static_cast<std::uint8_t>(table[i].codim);
    }
    return out;
}

constexpr auto all = make_all();
constexpr auto weights = make_weights();

} // namespace

const GeneratorInfo &info(Generator g) noexcept
{
    return table[index(g)];
}

const std::array<Generator, generator_count> &all_generators() noexcept
{
    return all;
}

const std::array<std::uint8_t, generator_count> &codim_weights() noexcept
{
    return weights;
}

std::optional<Generator> find_generator(Family family, int mu, Sign sign) noexcept
{
    for (std::size_t i = 0; i < generator_count; ++i) {
        if (table[i].family == family && table[i].mu == mu && table[i].sign == sign) {
            return static_cast<Generator>(i);
        }
    }
    return std::nullopt;
}

bool is_signed_pair(Family family, int mu) noexcept
{
    return find_generator(family, mu, Sign::plus).has_value();
}

Generator flip_sign(Generator g) noexcept
{
    const auto &gi = info(g);
    if (gi.sign == Sign::none) {
        return g;
    }
    const auto other = gi.sign == Sign::plus ? Sign::minus : Sign::plus;
    return *find_generator(gi.family, gi.mu, other);
}

bool is_collapsible(Generator g) noexcept
{
    switch (g) {
        case Generator::A3p:
        case Generator::A3m:
        case Generator::A5p:
        case Generator::A5m:
        case Generator::D5p:
        case Generator::D5m:
        case Generator::E6p:
        case Generator::E6m:
            return true;
        default:
            return false;
    }
}

Generator collapse_representative(Generator g) noexcept
{
    if (is_collapsible(g) && info(g).sign == Sign::minus) {
        return flip_sign(g);
    }
    return g;
}

} // namespace msing
