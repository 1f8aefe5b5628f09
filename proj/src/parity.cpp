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

#include <msing/parity.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include <msing/error.hpp>

namespace msing {

namespace {

// GF(2) coordinates: all A1-free types of codim <= 5, in graded order.
const std::vector<Monomial> &gf2_variables()
{
    static const std::vector<Monomial> vars = enumerate_types(5, 0);
    return vars;
}

std::size_t gf2_index(const Monomial &m)
{
    const auto &vars = gf2_variables();
    const auto it = std::lower_bound(vars.begin(), vars.end(), m);
    if (it == vars.end() || !(*it == m)) {
        throw std::invalid_argument("not an A1-free type of codim <= 5: " + format_type(m));
    }
    return static_cast<std::size_t>(it - vars.begin());
}

std::uint64_t to_bits(const Congruence &c)
{
    std::uint64_t bits = 0;
    for (const auto &m : c.support) {
        bits ^= std::uint64_t{1} << gf2_index(m);
    }
    return bits;
}

Congruence from_bits(std::uint64_t bits)
{
    std::vector<Monomial> support;
    for (std::size_t i = 0; i < gf2_variables().size(); ++i) {
        if ((bits >> i) & 1U) {
            support.push_back(gf2_variables()[i]);
        }
    }
    return Congruence::of(std::move(support));
}

using Mask = std::vector<char>;

void xor_into(Mask &a, const Mask &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] ^= b[i];
    }
}

std::vector<std::size_t> mask_indices(const Mask &m)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) {
            out.push_back(i);
        }
    }
    return out;
}

struct Gf2Work {
    std::vector<std::uint64_t> rows;
    std::vector<Mask> masks;
};

Gf2Work eliminate(std::span<const Congruence> base)
{
    Gf2Work w;
    for (std::size_t k = 0; k < base.size(); ++k) {
        std::uint64_t bits = to_bits(base[k]);
        Mask mask(base.size(), 0);
        mask[k] = 1;
        for (std::size_t i = 0; i < w.rows.size(); ++i) {
            const auto pivot = std::uint64_t{1} << std::countr_zero(w.rows[i]);
            if (bits & pivot) {
                bits ^= w.rows[i];
                xor_into(mask, w.masks[i]);
            }
        }
        if (bits == 0) {
            continue;
        }
        const auto pivot = std::uint64_t{1} << std::countr_zero(bits);
        for (std::size_t i = 0; i < w.rows.size(); ++i) {
            if (w.rows[i] & pivot) {
                w.rows[i] ^= bits;
                xor_into(w.masks[i], mask);
            }
        }
        w.rows.push_back(bits);
        w.masks.push_back(std::move(mask));
    }
    return w;
}

} // namespace

Congruence Congruence::of(std::vector<Monomial> support)
{
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return Congruence{std::move(support), std::nullopt};
}

std::string format_congruence(const Congruence &c, Notation notation)
{
    std::string out;
    for (const auto &m : c.support) {
        if (!out.empty()) {
            out += " + ";
        }
        out += format_type(m, notation);
    }
    return (out.empty() ? "0" : out) + " = 0 (mod 2)";
}

std::vector<Congruence> raw_congruences(std::span<const CaFormula> rows, Hypothesis level)
{
    std::vector<Congruence> out;
    for (const auto &row : rows) {
        if (row.hypothesis > level) {
            continue;
        }
        std::vector<Monomial> support;
        for (const auto &[m, c] : row.rhs) {
            if (c.get_den() == 2) {
                support.push_back(m);
            }
            else if (c.get_den() != 1) {
                throw ConsistencyError("row for " + format_type(row.lhs) + " has coefficient " + to_string(c) +
                                       " on " + format_type(m));
            }
        }
        if (!support.empty()) {
            auto c = Congruence::of(std::move(support));
            c.origin = row.lhs;
            out.push_back(std::move(c));
        }
    }
    return out;
}

Gf2Basis gf2_basis(std::span<const Congruence> base)
{
    auto w = eliminate(base);
    std::vector<std::size_t> order(w.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::countr_zero(w.rows[a]) < std::countr_zero(w.rows[b]);
    });
    Gf2Basis out;
    for (auto i : order) {
        out.rows.push_back(w.rows[i]);
        out.combination.push_back(mask_indices(w.masks[i]));
    }
    return out;
}

std::vector<Congruence> basis_congruences(const Gf2Basis &basis)
{
    std::vector<Congruence> out;
    for (auto bits : basis.rows) {
        out.push_back(from_bits(bits));
    }
    return out;
}

std::optional<std::vector<std::size_t>> gf2_combination(std::span<const Congruence> base, const Congruence &target)
{
    const auto w = eliminate(base);
    std::uint64_t bits = to_bits(target);
    Mask mask(base.size(), 0);
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        if (bits & (std::uint64_t{1} << std::countr_zero(w.rows[i]))) {
            bits ^= w.rows[i];
            xor_into(mask, w.masks[i]);
        }
    }
    if (bits != 0) {
        return std::nullopt;
    }
    return mask_indices(mask);
}

std::size_t RelationLattice::index_of(const Monomial &m) const
{
    const auto it = std::lower_bound(variables.begin(), variables.end(), m);
    if (it == variables.end() || !(*it == m)) {
        throw std::invalid_argument("type " + format_type(m) + " is not a lattice variable");
    }
    return static_cast<std::size_t>(it - variables.begin());
}

RelationLattice make_lattice(std::span<const CaFormula> rows, Hypothesis level, int dim)
{
    RelationLattice out;
    out.variables = enumerate_types(dim, 0);
    for (const auto &row : rows) {
        if (row.hypothesis > level) {
            continue;
        }
        lattice::RationalVector v(out.variables.size(), Rational(0));
        v[out.index_of(row.lhs)] += 1;
        for (const auto &[m, c] : row.rhs) {
            v[out.index_of(m)] -= c;
        }
        out.row_labels.push_back(row.lhs);
        out.row_hypotheses.push_back(row.hypothesis);
        out.rows.push_back(std::move(v));
    }
    return out;
}

namespace {

lattice::RationalVector to_vector(const RelationLattice &lat, const AlgebraElement &ell)
{
    lattice::RationalVector v(lat.variables.size(), Rational(0));
    for (const auto &[m, c] : ell) {
        v[lat.index_of(m)] = c;
    }
    return v;
}

Integer lcm_of_denominators(const std::vector<lattice::RationalVector> &vs)
{
    Integer l = 1;
    for (const auto &v : vs) {
        for (const auto &x : v) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
    }
    return l;
}

} // namespace

OracleResult divisibility_oracle(const RelationLattice &lat, const AlgebraElement &ell, const Integer &d)
{
    if (d <= 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    const std::size_t n = lat.variables.size();
    const auto l = to_vector(lat, ell);
    const auto ech = lattice::row_echelon(lat.rows, n);

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (!ech.is_pivot(c)) {
            free_cols.push_back(c);
        }
    }

    // Reduction modulo the row space, read on the free columns:
    // red(e_f) = e_f and red(e_p) = -E_p.
    std::vector<lattice::RationalVector> gens;
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        lattice::RationalVector g(free_cols.size(), Rational(0));
        g[i] = 1;
        gens.push_back(std::move(g));
    }
    for (const auto &row : ech.rows) {
        lattice::RationalVector g;
        for (auto f : free_cols) {
            g.push_back(-row[f]);
        }
        gens.push_back(std::move(g));
    }
    lattice::RationalVector target;
    for (auto f : free_cols) {
        Rational t = l[f];
        for (std::size_t i = 0; i < ech.rows.size(); ++i) {
            t -= l[ech.pivots[i]] * ech.rows[i][f];
        }
        target.push_back(t / Rational(d));
    }

    std::vector<lattice::RationalVector> all = gens;
    all.push_back(target);
    const Integer scale = lcm_of_denominators(all);
    std::vector<lattice::IntegerVector> int_gens;
    for (const auto &g : gens) {
        lattice::IntegerVector v;
        for (const auto &x : g) {
            const Rational y = x * scale;
            v.push_back(y.get_num());
        }
        int_gens.push_back(std::move(v));
    }
    lattice::IntegerVector int_target;
    for (const auto &x : target) {
        const Rational y = x * scale;
        int_target.push_back(y.get_num());
    }

    OracleResult out;
    const auto h = lattice::hermite(int_gens, free_cols.size());
    const auto coords = lattice::lattice_coordinates(h, int_target);
    if (!coords) {
        return out;
    }

    // w collects the integer vector; r = ell - d w lies in the row space.
    lattice::RationalVector w(n, Rational(0));
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        w[free_cols[i]] = (*coords)[i];
    }
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        w[ech.pivots[i]] = (*coords)[free_cols.size() + i];
    }
    out.implied = true;
    out.lambda.assign(lat.rows.size(), Rational(0));
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        const Rational r = l[ech.pivots[i]] - Rational(d) * w[ech.pivots[i]];
        for (std::size_t j = 0; j < lat.rows.size(); ++j) {
            out.lambda[j] += r * ech.transform[i][j];
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        out.integral.add_term(lat.variables[c], w[c]);
    }
    out.verified = verify_witness(lat, ell, d, out);
    if (!out.verified) {
        throw ConsistencyError("divisibility witness failed exact re-substitution");
    }
    return out;
}

bool verify_witness(const RelationLattice &lat, const AlgebraElement &ell, const Integer &d, const OracleResult &result)
{
    if (!result.implied || result.lambda.size() != lat.rows.size()) {
        return false;
    }
    auto residual = to_vector(lat, ell);
    for (std::size_t j = 0; j < lat.rows.size(); ++j) {
        for (std::size_t c = 0; c < residual.size(); ++c) {
            residual[c] -= result.lambda[j] * lat.rows[j][c];
        }
    }
    for (std::size_t c = 0; c < residual.size(); ++c) {
        const Rational w = result.integral.coefficient(lat.variables[c]);
        if (!is_integer(w) || residual[c] != Rational(d) * w) {
            return false;
        }
    }
    for (const auto &[m, c] : result.integral) {
        lat.index_of(m);
    }
    return true;
}

AlgebraElement expand_collapsed(const AlgebraElement &collapsed)
{
    AlgebraElement out;
    for (const auto &[rep, c] : collapsed) {
        for (const auto &m : collapse_fiber(rep)) {
            out.add_term(m, c);
        }
    }
    return out;
}

std::vector<ParityVerdict> report_isolated_point_parities(std::span<const CaFormula> rows,
                                                          std::span<const ParityStatement> statements, int dim)
{
    std::vector<RelationLattice> lattices;
    for (auto level : {Hypothesis::H0, Hypothesis::H1, Hypothesis::H2}) {
        lattices.push_back(make_lattice(rows, level, dim));
    }
    std::vector<ParityVerdict> out;
    for (const auto &s : statements) {
        ParityVerdict v{s, std::nullopt, {}};
        for (std::size_t i = 0; i < lattices.size(); ++i) {
            auto r = divisibility_oracle(lattices[i], s.ell, s.modulus);
            if (r.implied) {
                v.level = static_cast<Hypothesis>(i);
                v.result = std::move(r);
                break;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace msing
