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


#ifndef MSING_RELATIONS_HPP
#define MSING_RELATIONS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <msing/algebra.hpp>
#include <msing/formula.hpp>
#include <msing/jtable.hpp>
#include <msing/monomial.hpp>
#include <msing/rational.hpp>

namespace msing {

inline constexpr int default_a1_max = 12;

// sum_X coefficients[X] * chi(X) = rhs_sign * chi(index), where
// coefficients[X] = (-1)^codim(X) * J_index(X).
struct Equation {
    Monomial index;
    std::map<Monomial, Integer> coefficients;
    int rhs_sign = 1;
    Hypothesis hypothesis = Hypothesis::H0;

    Integer coefficient(const Monomial &x) const;
};

struct RelationSystem {
    int dim = 5;
    int a1_max = default_a1_max;
    // Sorted by index type.
    std::vector<Equation> equations;

    const Equation *find(const Monomial &index) const;
};

enum class SystemRoute {
    // Expand the product of geometric series in the bigraded algebra.
    generating_function,
    // Evaluate J on every unknown and read off coefficients.
    direct,
};

// Hypothesis needed for the equation indexed by a: H2 for the unit, H1 for
// A1^k (k > 0) and codim-1 types, H0 otherwise.
Hypothesis equation_hypothesis(const Monomial &a);

// Equations for every A with codim(A) = dim - 1 (mod 2), codim(A) <= dim - 1,
// a1_degree(A) <= a1_max, over unknowns with codim <= dim and
// a1_degree <= a1_max.
RelationSystem build_system(const JEvaluator &j, int dim, int a1_max,
                            SystemRoute route = SystemRoute::generating_function);

// Free unknowns have codim = dim (mod 2).
inline bool is_free(const Monomial &x, int dim) noexcept
{
    return (x.codim() - dim) % 2 == 0;
}

// chi(A) by back-substitution in descending codim order. Throws
// ConsistencyError if a diagonal entry is not the expected one.
std::vector<SolvedFormula> solve(const RelationSystem &system);

// chi(A) = 1/2 sum_{X != A} (-1)^(dim - codim X) J_A(X) chi(X), evaluated
// from adjacency indices.
AlgebraElement half_sum_form(const JEvaluator &j, const Monomial &a, int dim, int a1_max);

// The same right-hand side obtained by moving the diagonal term of eq
// across.
AlgebraElement rearranged(const Equation &eq);

struct Residual {
    Monomial index;
    Rational value;
};

// Substitutes the solved formulas (and treats free types as themselves)
// into every equation; lists the equations with nonzero residual.
std::vector<Residual> residuals(std::span<const SolvedFormula> formulas, const RelationSystem &system);

// Maximum absolute residual over all equations; exactly 0 when consistent.
Rational residual_check(std::span<const SolvedFormula> formulas, const RelationSystem &system);

// Fits a shift pattern to the formulas for base * A1^k, k = 0..K (indexed
// by k). Throws ConsistencyError("no shift-stability at K") if the pattern
// has not settled.
ParametricFormula lift_parametric(const Monomial &base, std::span<const SolvedFormula> family);

CaFormula aggregate_ca(const ParametricFormula &p);

// Sums each complete sign fiber of lhs types and rewrites terms in
// collapsed notation. Throws ConsistencyError for incomplete fibers or
// terms whose coefficients differ across a fiber.
std::vector<CaFormula> collapse_signs(std::span<const CaFormula> rows);

struct Derivation {
    RelationSystem system;
    std::vector<SolvedFormula> solved;
    std::vector<ParametricFormula> parametric;
    std::vector<CaFormula> ca;
};

// The full pipeline for one dimension. Parametric rows exist for every
// A1-free index type.
Derivation derive(const JEvaluator &j, int dim, int a1_max = default_a1_max);

} // namespace msing

#endif
