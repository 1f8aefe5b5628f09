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

#include <msing/relations.hpp>

#include <algorithm>
#include <stdexcept>

#include <msing/dsl.hpp>
#include <msing/error.hpp>

namespace msing {

namespace {

int parity_sign(int n) noexcept
{
    return n % 2 == 0 ? 1 : -1;
}

bool is_index_type(const Monomial &a, int dim) noexcept
{
    return a.codim() <= dim - 1 && (a.codim() - (dim - 1)) % 2 == 0;
}

void check_dim(int dim, int a1_max)
{
    if (dim < 3 || dim > 5) {
        throw std::invalid_argument("dimension must be 3, 4 or 5");
    }
    if (a1_max < 0 || a1_max > Monomial::max_exponent) {
        throw std::invalid_argument("A1 bound out of range");
    }
}

// An element of the bigraded algebra: unknown monomials X with
// coefficients in the algebra of index monomials.
using BiElement = std::map<Monomial, AlgebraElement>;

BiElement bi_mul(const BiElement &a, const BiElement &b, const TruncationBounds &x_bounds,
                 const TruncationBounds &y_bounds)
{
    BiElement out;
    for (const auto &[xa, ya] : a) {
        for (const auto &[xb, yb] : b) {
            if (xa.codim() + xb.codim() > x_bounds.max_codim || xa.a1_degree() + xb.a1_degree() > x_bounds.max_a1) {
                continue;
            }
            auto y = mul(ya, yb, y_bounds);
            if (y.is_zero()) {
                continue;
            }
            auto &slot = out[xa * xb];
            slot += y;
            if (slot.is_zero()) {
                out.erase(xa * xb);
            }
        }
    }
    return out;
}

// sum_k x^k for x = (-1)^codim(g) J(g) (x) g.
BiElement bi_geometric(const JEvaluator &j, Generator g, const TruncationBounds &x_bounds,
                       const TruncationBounds &y_bounds)
{
    BiElement out;
    auto x = j.table().j_generator(g).truncated(y_bounds) * Rational(parity_sign(codim(g)));
    auto xm = Monomial::unit();
    auto y = AlgebraElement::one();
    while (x_bounds.admits(xm) && !y.is_zero()) {
        out.emplace(xm, y);
        xm = xm * Monomial::power(g);
        y = mul(y, x, y_bounds);
    }
    return out;
}

std::map<Monomial, std::map<Monomial, Integer>> collect(const std::map<Monomial, AlgebraElement> &images, int dim)
{
    // images[X] holds (-1)^codim(X) J(X); bicoefficient b at (X, A) gives
    // c_{A,X} = (-1)^codim(A) b.
    std::map<Monomial, std::map<Monomial, Integer>> by_index;
    for (const auto &[x, y] : images) {
        for (const auto &[a, b] : y) {
            if (!is_index_type(a, dim)) {
                continue;
            }
            if (!is_integer(b)) {
                throw ConsistencyError("non-integer adjacency coefficient in J(" + format_type(x) + ")");
            }
            Integer c = b.get_num();
            if (a.codim() % 2 != 0) {
                c = -c;
            }
            by_index[a][x] = c;
        }
    }
    return by_index;
}

} // namespace

Integer Equation::coefficient(const Monomial &x) const
{
    const auto it = coefficients.find(x);
    return it == coefficients.end() ? Integer(0) : it->second;
}

const Equation *RelationSystem::find(const Monomial &index) const
{
    const auto it = std::lower_bound(equations.begin(), equations.end(), index,
                                     [](const Equation &e, const Monomial &m) { return e.index < m; });
    return it != equations.end() && it->index == index ? &*it : nullptr;
}

Hypothesis equation_hypothesis(const Monomial &a)
{
    if (a.is_unit()) {
        return Hypothesis::H2;
    }
    if (a.codim() <= 1) {
        return Hypothesis::H1;
    }
    return Hypothesis::H0;
}

RelationSystem build_system(const JEvaluator &j, int dim, int a1_max, SystemRoute route)
{
    check_dim(dim, a1_max);
    const auto x_bounds = TruncationBounds{dim, a1_max};
    const auto y_bounds = TruncationBounds{dim - 1, a1_max};

    std::map<Monomial, AlgebraElement> images;
    if (route == SystemRoute::generating_function) {
        BiElement lambda{{Monomial::unit(), AlgebraElement::one()}};
        for (auto g : all_generators()) {
            if (codim(g) <= dim) {
                lambda = bi_mul(lambda, bi_geometric(j, g, x_bounds, y_bounds), x_bounds, y_bounds);
            }
        }
        images = std::move(lambda);
    }
    else {
        for (const auto &x : enumerate_types(dim, a1_max)) {
            images.emplace(x, j.j_monomial(x, y_bounds) * Rational(parity_sign(x.codim())));
        }
    }

    RelationSystem system;
    system.dim = dim;
    system.a1_max = a1_max;
    auto by_index = collect(images, dim);
    for (const auto &a : enumerate_types(dim - 1, a1_max)) {
        if (!is_index_type(a, dim)) {
            continue;
        }
        Equation eq;
        eq.index = a;
        eq.rhs_sign = parity_sign(dim);
        eq.hypothesis = equation_hypothesis(a);
        if (auto it = by_index.find(a); it != by_index.end()) {
            eq.coefficients = std::move(it->second);
        }
        system.equations.push_back(std::move(eq));
    }
    return system;
}

std::vector<SolvedFormula> solve(const RelationSystem &system)
{
    const int dim = system.dim;
    std::vector<const Equation *> order;
    for (const auto &eq : system.equations) {
        order.push_back(&eq);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const Equation *a, const Equation *b) { return a->index.codim() > b->index.codim(); });

    std::map<Monomial, SolvedFormula> solved;
    for (const auto *eq : order) {
        const auto &a = eq->index;
        const Integer diag = eq->coefficient(a);
        if (diag != parity_sign(a.codim())) {
            throw ConsistencyError("equation for " + format_type(a) + " has diagonal " + diag.get_str() + ", expected " +
                                   std::to_string(parity_sign(a.codim())));
        }
        const Rational pivot = Rational(diag) - eq->rhs_sign;
        SolvedFormula f{a, {}, eq->hypothesis};
        for (const auto &[x, c] : eq->coefficients) {
            if (x == a) {
                continue;
            }
            if (x.codim() <= a.codim()) {
                throw ConsistencyError("equation for " + format_type(a) + " needs a pivot on " + format_type(x));
            }
            const Rational factor = Rational(-c) / pivot;
            if (is_free(x, dim)) {
                f.rhs.add_term(x, factor);
                continue;
            }
            const auto it = solved.find(x);
            if (it == solved.end()) {
                throw ConsistencyError("equation for " + format_type(a) + " refers to unsolved " + format_type(x));
            }
            f.rhs += it->second.rhs * factor;
            f.hypothesis = std::max(f.hypothesis, it->second.hypothesis);
        }
        solved.emplace(a, std::move(f));
    }
    std::vector<SolvedFormula> out;
    out.reserve(solved.size());
    for (auto &[a, f] : solved) {
        out.push_back(std::move(f));
    }
    return out;
}

AlgebraElement half_sum_form(const JEvaluator &j, const Monomial &a, int dim, int a1_max)
{
    AlgebraElement out;
    for (const auto &x : enumerate_types(dim, a1_max)) {
        if (x == a) {
            continue;
        }
        const auto ja = j.adjacency_index(a, x);
        if (ja != 0) {
            out.add_term(x, make_rational(ja * parity_sign(dim - x.codim()), 2));
        }
    }
    return out;
}

AlgebraElement rearranged(const Equation &eq)
{
    const Rational pivot = Rational(eq.coefficient(eq.index)) - eq.rhs_sign;
    if (pivot == 0) {
        throw ConsistencyError("equation for " + format_type(eq.index) + " cannot be solved for its index");
    }
    AlgebraElement out;
    for (const auto &[x, c] : eq.coefficients) {
        if (!(x == eq.index)) {
            out.add_term(x, Rational(-c) / pivot);
        }
    }
    return out;
}

std::vector<Residual> residuals(std::span<const SolvedFormula> formulas, const RelationSystem &system)
{
    std::map<Monomial, const AlgebraElement *> value;
    for (const auto &f : formulas) {
        value[f.lhs] = &f.rhs;
    }
    const auto substitute = [&](const Monomial &x) {
        const auto it = value.find(x);
        return it == value.end() ? AlgebraElement::term(x) : *it->second;
    };
    std::vector<Residual> out;
    for (const auto &eq : system.equations) {
        AlgebraElement r = substitute(eq.index) * Rational(-eq.rhs_sign);
        for (const auto &[x, c] : eq.coefficients) {
            r += substitute(x) * Rational(c);
        }
        Rational worst = 0;
        for (const auto &[m, c] : r) {
            worst = std::max(worst, Rational(abs(c)));
        }
        if (worst != 0) {
            out.push_back({eq.index, worst});
        }
    }
    return out;
}

Rational residual_check(std::span<const SolvedFormula> formulas, const RelationSystem &system)
{
    Rational worst = 0;
    for (const auto &r : residuals(formulas, system)) {
        worst = std::max(worst, r.value);
    }
    return worst;
}

namespace {

ShiftTerms pattern_at(const SolvedFormula &f, int k)
{
    ShiftTerms out;
    for (const auto &[m, c] : f.rhs) {
        if (m.a1_degree() > k) {
            throw ConsistencyError("formula for " + format_type(f.lhs) + " contains " + format_type(m) +
                                   " with a larger A1 exponent");
        }
        out[ShiftKey{m.without_a1(), k - m.a1_degree()}] += c;
    }
    return out;
}

} // namespace

ParametricFormula lift_parametric(const Monomial &base, std::span<const SolvedFormula> family)
{
    if (base.a1_degree() != 0) {
        throw std::invalid_argument("lift_parametric: base must be A1-free");
    }
    const int top = static_cast<int>(family.size()) - 1;
    for (int k = 0; k <= top; ++k) {
        if (!(family[k].lhs == base.with_a1(k))) {
            throw std::invalid_argument("lift_parametric: family member " + std::to_string(k) + " has lhs " +
                                        format_type(family[k].lhs));
        }
    }
    const auto unstable = [&] {
        return ConsistencyError("no shift-stability at K = " + std::to_string(top) + " for " +
                                format_shifted_type(base, 0));
    };
    if (top < 2) {
        throw unstable();
    }
    ParametricFormula p;
    p.base = base;
    p.terms = pattern_at(family[top], top);
    p.hypothesis = family[top].hypothesis;
    p.hypothesis_at_zero = family[0].hypothesis;
    if (p.max_shift() > top - 2 || !(pattern_at(family[top - 1], top - 1) == p.terms)) {
        throw unstable();
    }
    for (int k = 0; k <= top; ++k) {
        if (!(p.instantiate(k) == family[k].rhs)) {
            throw unstable();
        }
        if (k > 0 && family[k].hypothesis > p.hypothesis) {
            p.hypothesis = family[k].hypothesis;
        }
    }
    return p;
}

CaFormula aggregate_ca(const ParametricFormula &p)
{
    CaFormula out;
    out.lhs = p.base;
    out.hypothesis = std::max(p.hypothesis, p.hypothesis_at_zero);
    for (const auto &[key, c] : p.terms) {
        out.rhs.add_term(key.base, c);
    }
    return out;
}

Derivation derive(const JEvaluator &j, int dim, int a1_max)
{
    Derivation d;
    d.system = build_system(j, dim, a1_max);
    d.solved = solve(d.system);

    std::map<Monomial, const SolvedFormula *> by_lhs;
    for (const auto &f : d.solved) {
        by_lhs[f.lhs] = &f;
    }
    for (const auto &[lhs, f] : by_lhs) {
        if (lhs.a1_degree() != 0) {
            continue;
        }
        std::vector<SolvedFormula> family;
        for (int k = 0; k <= a1_max; ++k) {
            family.push_back(*by_lhs.at(lhs.with_a1(k)));
        }
        d.parametric.push_back(lift_parametric(lhs, family));
        d.ca.push_back(aggregate_ca(d.parametric.back()));
    }
    return d;
}

} // namespace msing
