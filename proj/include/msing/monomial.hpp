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

#ifndef MSING_MONOMIAL_HPP
#define MSING_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <msing/generator.hpp>
#include <msing/kernels.hpp>

namespace msing {

// A multisingularity type: a monomial in the free commutative semigroup on
// the 16 generators, stored as a packed exponent vector.
class Monomial {
public:
    using Exponents = std::array<std::uint8_t, generator_count>;

    static constexpr int max_exponent = kernels::max_exponent;

    Monomial() = default;

    // Throws std::out_of_range if an exponent exceeds max_exponent.
    explicit Monomial(const Exponents &exps);

    static Monomial unit() noexcept
    {
        return Monomial{};
    }

    // g^e; e must lie in [0, max_exponent].
    static Monomial power(Generator g, int e = 1);

    int exponent(Generator g) const noexcept
    {
        return exps_[index(g)];
    }

    const Exponents &exponents() const noexcept
    {
        return exps_;
    }

    const std::uint8_t *data() const noexcept
    {
        return exps_.data();
    }

    int codim() const noexcept;

    int a1_degree() const noexcept
    {
        return exps_[0];
    }

    bool is_unit() const noexcept;

    // Copy with the A1 exponent replaced.
    Monomial with_a1(int k) const;

    Monomial without_a1() const noexcept
    {
        return with_a1(0);
    }

    // Number of factors counted with multiplicity.
    int total_degree() const noexcept;

    bool divides(const Monomial &other) const noexcept;

    // Exponent-wise difference; requires divisor.divides(*this).
    Monomial quotient(const Monomial &divisor) const;

    // Throws std::overflow_error when an exponent would exceed max_exponent.
    friend Monomial operator*(const Monomial &a, const Monomial &b);

    friend bool operator==(const Monomial &, const Monomial &) = default;

    // Graded total order: codim, then A1-degree, then lexicographic on the
    // exponent vector in generator order.
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) noexcept;

private:
    alignas(kernels::lane_bytes) Exponents exps_{};
};

static_assert(sizeof(Monomial) == kernels::lane_bytes);
static_assert(alignof(Monomial) == kernels::lane_bytes);

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept;
};

// How signed generators are written. In collapsed notation A3, A5, D5 and
// E6 are written without sign (each standing for the plus representative);
// D4 and D6 keep theirs.
enum class Notation { signed_types, collapsed };

// type := "1" | factor (SP factor)* ; factor := gen ("^" exp)?
// gen := ("A"|"D"|"E") digit sign? ; exp := positive integer.
// Factors may repeat and appear in any order. Throws ParseError.
Monomial parse_type(std::string_view text, Notation notation = Notation::signed_types);

// Canonical text: factors in descending generator order, A1 last, exponent
// 1 omitted; the unit is "1".
std::string format_type(const Monomial &m, Notation notation = Notation::signed_types);

// Exactly the monomials with codim <= max_codim and A1-degree <= max_a1,
// sorted by the graded total order. max_codim must lie in 0..5.
std::vector<Monomial> enumerate_types(int max_codim, int max_a1);

// Image under the sign-forgetting map (collapsible generators move to
// their plus representative).
Monomial collapse(const Monomial &m);

// All signed monomials whose collapse equals representative, sorted.
std::vector<Monomial> collapse_fiber(const Monomial &representative);

} // namespace msing

#endif
