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

#ifndef MSING_FORMULA_HPP
#define MSING_FORMULA_HPP

#include <compare>
#include <map>
#include <optional>
#include <string_view>

#include <msing/algebra.hpp>
#include <msing/monomial.hpp>
#include <msing/rational.hpp>

namespace msing {

// Compactness hypotheses, ordered from weakest to strongest assumption:
// H0 the singular set of the caustic is compact, H1 the source is compact,
// H2 source and target are compact.
enum class Hypothesis { H0 = 0, H1 = 1, H2 = 2 };

std::string_view to_string(Hypothesis h) noexcept;
std::optional<Hypothesis> parse_hypothesis(std::string_view text) noexcept;

// chi(lhs) = sum rhs[T] chi(T); rhs is supported on free types only.
struct SolvedFormula {
    Monomial lhs;
    AlgebraElement rhs;
    Hypothesis hypothesis = Hypothesis::H0;

    friend bool operator==(const SolvedFormula &, const SolvedFormula &) = default;
};

// A basis term base * A1^(k - shift) of a family row.
struct ShiftKey {
    Monomial base;
    int shift = 0;

    friend bool operator==(const ShiftKey &, const ShiftKey &) = default;
    friend std::strong_ordering operator<=>(const ShiftKey &, const ShiftKey &) = default;
};

using ShiftTerms = std::map<ShiftKey, Rational>;

// chi(base * A1^k) = sum c * chi(B * A1^(k - s)) for all k >= 0, where terms
// with k - s < 0 vanish. base and every B are A1-free.
struct ParametricFormula {
    Monomial base;
    ShiftTerms terms;
    // Hypothesis for k > 0, and for k = 0 (differs only for the A1^k row).
    Hypothesis hypothesis = Hypothesis::H0;
    Hypothesis hypothesis_at_zero = Hypothesis::H0;

    int max_shift() const noexcept;
    AlgebraElement instantiate(int k) const;
    Hypothesis hypothesis_at(int k) const noexcept
    {
        return k == 0 ? hypothesis_at_zero : hypothesis;
    }

    friend bool operator==(const ParametricFormula &, const ParametricFormula &) = default;
};

// chi(lhs^ca) = sum rhs[B] chi(B^ca) over A1-free types. In collapsed
// notation every monomial is a sign-collapsed representative.
struct CaFormula {
    Monomial lhs;
    AlgebraElement rhs;
    Hypothesis hypothesis = Hypothesis::H0;
    Notation notation = Notation::signed_types;

    friend bool operator==(const CaFormula &, const CaFormula &) = default;
};

} // namespace msing

#endif
