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


#ifndef MSING_PARITY_HPP
#define MSING_PARITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <msing/algebra.hpp>
#include <msing/formula.hpp>
#include <msing/lattice.hpp>
#include <msing/monomial.hpp>

namespace msing {

// sum of support = 0 (mod 2) over ca-quantities of A1-free types.
struct Congruence {
    // Sorted, duplicate-free.
    std::vector<Monomial> support;
    // The ca row it came from, if any.
    std::optional<Monomial> origin;

    static Congruence of(std::vector<Monomial> support);

    friend bool operator==(const Congruence &a, const Congruence &b)
    {
        return a.support == b.support;
    }
};

std::string format_congruence(const Congruence &c, Notation notation = Notation::signed_types);

// Terms with half-odd coefficients of every row valid at level. Throws
// ConsistencyError on a coefficient whose denominator is not 1 or 2.
std::vector<Congruence> raw_congruences(std::span<const CaFormula> rows, Hypothesis level);

// Reduced GF(2) row basis of a list of congruences over the 48 A1-free
// types (pivot = earliest type in the graded order). combination[i] lists
// the input congruences summing to rows[i].
struct Gf2Basis {
    std::vector<std::uint64_t> rows;
    std::vector<std::vector<std::size_t>> combination;

    std::size_t rank() const noexcept
    {
        return rows.size();
    }
};

Gf2Basis gf2_basis(std::span<const Congruence> base);
std::vector<Congruence> basis_congruences(const Gf2Basis &basis);

// Indices into base whose sum is target, if target is in the span.
std::optional<std::vector<std::size_t>> gf2_combination(std::span<const Congruence> base, const Congruence &target);

inline bool gf2_implies(std::span<const Congruence> base, const Congruence &target)
{
    return gf2_combination(base, target).has_value();
}

// Exact relations lhs - rhs = 0 over the A1-free ca-quantities.
struct RelationLattice {
    std::vector<Monomial> variables;
    std::vector<Monomial> row_labels;
    std::vector<Hypothesis> row_hypotheses;
    std::vector<lattice::RationalVector> rows;

    std::size_t index_of(const Monomial &m) const;
};

// Rows valid at level; variables are all A1-free types of codim <= dim.
RelationLattice make_lattice(std::span<const CaFormula> rows, Hypothesis level, int dim = 5);

struct OracleResult {
    bool implied = false;
    // When implied: ell - sum lambda[i] * rows[i] = d * integral.
    std::vector<Rational> lambda;
    AlgebraElement integral;
    bool verified = false;
};

// Decides whether ell(v) is divisible by d for every integer vector v
// satisfying the lattice rows. NOT implied means the relations alone do
// not force it.
OracleResult divisibility_oracle(const RelationLattice &lattice, const AlgebraElement &ell, const Integer &d);

// Re-checks a witness by exact substitution.
bool verify_witness(const RelationLattice &lattice, const AlgebraElement &ell, const Integer &d,
                    const OracleResult &result);

// Expands collapsed symbols into sums over their sign fibers.
AlgebraElement expand_collapsed(const AlgebraElement &collapsed);

struct ParityStatement {
    std::string label;
    AlgebraElement ell;
    Integer modulus = 2;
};

struct ParityVerdict {
    ParityStatement statement;
    // Weakest hypothesis level at which the statement is implied.
    std::optional<Hypothesis> level;
    OracleResult result;
};

// Tries H0, H1, H2 in turn for each statement.
std::vector<ParityVerdict> report_isolated_point_parities(std::span<const CaFormula> rows,
                                                          std::span<const ParityStatement> statements, int dim = 5);

} // namespace msing

#endif
