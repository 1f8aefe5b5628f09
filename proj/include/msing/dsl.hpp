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

#ifndef MSING_DSL_HPP
#define MSING_DSL_HPP

// The formula DSL used by the data files and the CLI:
//
//   line  := lhs "=" rhs | expr
//   expr  := term (("+"|"-") term)*
//   term  := [rational "*"] type-with-symbolic-exp | rational
//   A1 may carry a symbolic exponent "{k}" or "{k-s}" inside "@family k"
//   blocks; a bare rational denotes a multiple of the unit type 1.
//
// Directives ("@dim 5", "@requires H0", "@family k", "@group ...", ...)
// stay in effect until overridden. "#" starts a comment.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <msing/algebra.hpp>
#include <msing/formula.hpp>
#include <msing/monomial.hpp>

namespace msing {

struct Expression {
    bool symbolic = false;
    AlgebraElement concrete;
    ShiftTerms shifted;

    bool is_zero() const noexcept
    {
        return concrete.is_zero() && shifted.empty();
    }
};

Expression parse_expression(std::string_view text, Notation notation = Notation::signed_types,
                            bool allow_symbolic = false);

// Concrete expression; throws ParseError on symbolic exponents.
AlgebraElement parse_element(std::string_view text, Notation notation = Notation::signed_types);

std::string format_element(const AlgebraElement &e, Notation notation = Notation::signed_types);
std::string format_shift_terms(const ShiftTerms &terms, Notation notation = Notation::signed_types);

// "B A1^{k-s}" with the symbolic exponent last.
std::string format_shifted_type(const Monomial &base, int shift);

struct Directives {
    std::optional<int> dim;
    std::optional<Hypothesis> requires_level;
    std::optional<Hypothesis> requires_at_zero;
    std::optional<int> modulus;
    std::optional<int> a1_max;
    bool family = false;
    Notation notation = Notation::signed_types;
    std::string source;
    std::string group;
    // Increments with every "@group"; 0 before the first.
    int group_id = 0;
};

struct DslLine {
    std::size_t line = 0;
    Directives context;
    // Set for "J(<gen>) = ..." lines.
    std::optional<Generator> j_of;
    bool has_lhs = false;
    Expression lhs;
    Expression rhs;
};

struct DslDocument {
    std::vector<DslLine> lines;
};

// Throws ParseError with the 1-based line and column of the problem.
DslDocument parse_document(std::string_view text);

} // namespace msing

#endif
