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

#ifndef MSING_ALGEBRA_HPP
#define MSING_ALGEBRA_HPP

#include <climits>
#include <cstddef>
#include <map>
#include <string>

#include <msing/monomial.hpp>
#include <msing/rational.hpp>

namespace msing {

// Graded truncation: a monomial survives iff codim <= max_codim and
// A1-degree <= max_a1. Both gradings are additive, so truncating factors
// early or the product late gives the same result.
struct TruncationBounds {
    int max_codim = 5;
    int max_a1 = 12;

    // Validates max_codim in 0..5 and 0 <= max_a1 <= Monomial::max_exponent.
    static TruncationBounds make(int max_codim, int max_a1);

    // No truncation at all; only valid for products, not for series.
    static constexpr TruncationBounds unbounded() noexcept
    {
        return TruncationBounds{INT_MAX, INT_MAX};
    }

    bool is_bounded() const noexcept
    {
        return max_codim != INT_MAX && max_a1 != INT_MAX;
    }

    bool admits(const Monomial &m) const noexcept
    {
        return m.codim() <= max_codim && m.a1_degree() <= max_a1;
    }

    bool dominates(const TruncationBounds &other) const noexcept
    {
        return max_codim >= other.max_codim && max_a1 >= other.max_a1;
    }

    friend bool operator==(const TruncationBounds &, const TruncationBounds &) = default;
};

// A finite rational linear combination of multisingularity types, i.e. an
// element of Q[S+]. Zero coefficients are never stored; iteration follows
// the graded monomial order.
class AlgebraElement {
public:
    using Terms = std::map<Monomial, Rational>;

    AlgebraElement() = default;

    static AlgebraElement one()
    {
        return term(Monomial::unit(), 1);
    }

    static AlgebraElement term(const Monomial &m, const Rational &c = 1);

    const Terms &terms() const noexcept
    {
        return terms_;
    }

    auto begin() const noexcept
    {
        return terms_.begin();
    }
    auto end() const noexcept
    {
        return terms_.end();
    }

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    std::size_t size() const noexcept
    {
        return terms_.size();
    }

    Rational coefficient(const Monomial &m) const;

    void add_term(const Monomial &m, const Rational &c);

    AlgebraElement truncated(const TruncationBounds &bounds) const;

    bool has_unit_term() const
    {
        return terms_.count(Monomial::unit()) != 0;
    }

    AlgebraElement &operator+=(const AlgebraElement &other);
    AlgebraElement &operator-=(const AlgebraElement &other);
    AlgebraElement &operator*=(const Rational &scalar);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b)
    {
        return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b)
    {
        return a -= b;
    }
    friend AlgebraElement operator-(AlgebraElement a)
    {
        return a *= Rational(-1);
    }
    friend AlgebraElement operator*(AlgebraElement a, const Rational &s)
    {
        return a *= s;
    }

    friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

private:
    Terms terms_;
};

AlgebraElement add(const AlgebraElement &a, const AlgebraElement &b);

// Truncated product. Uses the active monomial kernel for the exponent
// arithmetic and bound filtering.
AlgebraElement mul(const AlgebraElement &a, const AlgebraElement &b, const TruncationBounds &bounds);

// sum_{k>=0} x^k under truncation. Throws std::invalid_argument if x has a
// unit term or the bounds are not finite.
AlgebraElement geometric_partial_sum(const AlgebraElement &x, const TruncationBounds &bounds);

} // namespace msing

#endif
