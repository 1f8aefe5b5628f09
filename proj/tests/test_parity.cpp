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

#include <doctest.h>

#include <msing/dsl.hpp>
#include <msing/error.hpp>
#include <msing/lattice.hpp>
#include <msing/parity.hpp>

#include "properties.hpp"

using namespace msing;

namespace {

Congruence cong(std::initializer_list<const char *> types)
{
    std::vector<Monomial> s;
    for (const auto *t : types) {
        s.push_back(parse_type(t));
    }
    return Congruence::of(std::move(s));
}

const CaFormula &row_for(const std::vector<CaFormula> &rows, const char *lhs)
{
    const auto m = parse_type(lhs);
    for (const auto &r : rows) {
        if (r.lhs == m) {
            return r;
        }
    }
    throw Error(std::string("no row ") + lhs);
}

const std::vector<CaFormula> &ca5()
{
    return testing::derivation(5).ca;
}

Rational evaluate(const AlgebraElement &e, const AlgebraElement &values)
{
    Rational out = 0;
    for (const auto &[m, c] : e) {
        out += c * values.coefficient(m);
    }
    return out;
}

} // namespace

TEST_SUITE("parity")
{
    TEST_CASE("raw congruences of single rows")
    {
        const auto one = [](const char *lhs) {
            const std::vector<CaFormula> rows{row_for(ca5(), lhs)};
            const auto raw = raw_congruences(rows, Hypothesis::H0);
            REQUIRE(raw.size() == 1);
            CHECK(raw[0].origin == parse_type(lhs));
            return raw[0];
        };
        CHECK(one("D5+") == cong({"D6+", "D6-"}));
        CHECK(one("A5+") == cong({"E6+", "E6-", "A6"}));
        CHECK(one("A2^4") == cong({"A4 A2^2"}));
        CHECK(format_congruence(cong({"E6+", "A6"})) == "E6+ + A6 = 0 (mod 2)");
    }

    TEST_CASE("hypothesis filtering")
    {
        const auto h0 = raw_congruences(ca5(), Hypothesis::H0);
        const auto h2 = raw_congruences(ca5(), Hypothesis::H2);
        CHECK(h0.size() < h2.size());
        for (const auto &c : h0) {
            CHECK(*c.origin != Monomial::unit());
        }
        CaFormula bad = row_for(ca5(), "A3+");
        bad.rhs += parse_element("1/3*A6");
        CHECK_THROWS_AS(raw_congruences(std::vector<CaFormula>{bad}, Hypothesis::H0), ConsistencyError);
    }

    TEST_CASE("GF(2) span")
    {
        const auto raw = raw_congruences(ca5(), Hypothesis::H0);
        CHECK(gf2_implies(raw, cong({"D4+", "D4-", "A4 A3-"})));
        CHECK(gf2_implies(raw, cong({"A4", "A5+ A2", "A5- A2"})));
        CHECK(gf2_implies(raw, cong({"A4 A3+", "A4 A3-"})));
        CHECK_FALSE(gf2_implies(raw, cong({"E6+"})));
        CHECK_FALSE(gf2_implies({}, cong({"E6+"})));

        const auto combo = gf2_combination(raw, cong({"D5+ A2", "D5- A2"}));
        REQUIRE(combo.has_value());
        std::map<Monomial, int> count;
        for (const auto i : *combo) {
            for (const auto &m : raw[i].support) {
                count[m] ^= 1;
            }
        }
        std::vector<Monomial> odd;
        for (const auto &[m, c] : count) {
            if (c) {
                odd.push_back(m);
            }
        }
        CHECK(Congruence::of(odd) == cong({"D5+ A2", "D5- A2"}));
    }

    TEST_CASE("GF(2) basis is reduced and reproducible")
    {
        const auto raw = raw_congruences(ca5(), Hypothesis::H0);
        const auto a = gf2_basis(raw);
        const auto b = gf2_basis(raw);
        CHECK(a.rows == b.rows);
        CHECK(a.rank() == 10);
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            const auto pivot = a.rows[i] & (~a.rows[i] + 1);
            for (std::size_t k = 0; k < a.rows.size(); ++k) {
                if (k != i) {
                    CHECK((a.rows[k] & pivot) == 0);
                }
            }
        }
        for (const auto &c : basis_congruences(a)) {
            CHECK(gf2_implies(raw, c));
        }
    }

    TEST_CASE("divisibility oracle")
    {
        const auto lat = make_lattice(ca5(), Hypothesis::H0);
        CHECK(lat.variables.size() == 48);
        CHECK(lat.rows.size() == 16);

        const auto d5 = parse_element("D5+ A2 + D5- A2");
        const auto r = divisibility_oracle(lat, d5, 2);
        CHECK(r.implied);
        CHECK(r.verified);
        CHECK(verify_witness(lat, d5, 2, r));

        const auto half = parse_element("1/2*A4 A3+ + 1/2*A4 A3-");
        CHECK(divisibility_oracle(lat, half, 1).implied);
        CHECK_FALSE(divisibility_oracle(lat, parse_element("E6+"), 2).implied);
        CHECK_FALSE(divisibility_oracle(lat, parse_element("1/3*A6"), 1).implied);
        CHECK(divisibility_oracle(lat, parse_element("2*A6"), 2).implied);

        auto tampered = r;
        tampered.integral += parse_element("A2");
        CHECK_FALSE(verify_witness(lat, d5, 2, tampered));
    }

    TEST_CASE("isolated point parities")
    {
        const auto parse = [](const char *text) {
            return ParityStatement{text, expand_collapsed(parse_element(text, Notation::collapsed)), 2};
        };
        const std::vector<ParityStatement> statements{parse("D5 A2"), parse("A4 A3"), parse("A4 A2^2"),
                                                      parse("D4+ A3 + D4- A3 + E6")};
        for (const auto &v : report_isolated_point_parities(ca5(), statements)) {
            CAPTURE(v.statement.label);
            CHECK(v.level == Hypothesis::H0);
            CHECK(v.result.verified);
        }
        CHECK(expand_collapsed(parse_element("D4+ A3 + E6", Notation::collapsed)) ==
              parse_element("D4+ A3+ + D4+ A3- + E6+ + E6-"));
    }

    TEST_CASE("the relations admit an odd value of D4 A2^2 + 1/2 A4 A3")
    {
        // An integer solution of every ca relation (H2 rows included).
        const auto v = parse_element(
            "165 + A2 - 34*A3- - 43*A3+ - 157*A2^2 + 2*D4+ + 3*A4 + 3*A3- A2 + 2*A3+ A2 + A2^3 + D5- + 4*D5+"
            " + 5*A5- + 4*A5+ + 6*A3-^2 + 8*A3- A3+ + 7*A3+^2 + 5*D4- A2 + 9*D4+ A2 + 16*A4 A2 + 13*A3- A2^2"
            " + 25*A3+ A2^2 + 9*A2^4 + 3*E6+ + 3*A6 + 2*D4- A3- + 3*D4+ A3+ + 2*A4 A3+ + D5- A2 + D5+ A2"
            " + 2*A5- A2 + A5+ A2 + 3*A3-^2 A2 + A3- A3+ A2 + 3*A3+^2 A2 + D4- A2^2 + D4+ A2^2 + 3*A3+ A2^3"
            " + A2^5");
        for (const auto &row : ca5()) {
            CAPTURE(format_type(row.lhs));
            CHECK(v.coefficient(row.lhs) == evaluate(row.rhs, v));
        }
        const auto ell = expand_collapsed(parse_element("D4+ A2^2 + D4- A2^2 + 1/2*A4 A3", Notation::collapsed));
        CHECK(evaluate(ell, v) == 3);
        for (const auto level : {Hypothesis::H0, Hypothesis::H1, Hypothesis::H2}) {
            CHECK_FALSE(divisibility_oracle(make_lattice(ca5(), level), ell, 2).implied);
        }
    }

    TEST_CASE("classical parities in dims 3 and 4")
    {
        const auto implied = [](int dim, const char *text) {
            const auto &ca = testing::derivation(dim).ca;
            const auto lat = make_lattice(ca, Hypothesis::H0, dim);
            const auto r = divisibility_oracle(lat, parse_element(text), 2);
            return r.implied && r.verified;
        };
        CHECK(implied(3, "A4"));
        CHECK(implied(3, "D4+ + D4-"));
        CHECK_FALSE(implied(3, "D4+"));
        CHECK(implied(4, "D5+ + D5-"));
        CHECK(implied(4, "A4 A2"));
        CHECK(implied(4, "D4+ A2 + D4- A2"));
    }

    TEST_CASE("integer lattice primitives")
    {
        using lattice::IntegerVector;
        const std::vector<IntegerVector> gens{{2, 4, 0}, {0, 6, 3}, {4, 2, 3}};
        const auto h = lattice::hermite(gens, 3);
        for (std::size_t i = 0; i < h.basis.size(); ++i) {
            CHECK(h.basis[i][h.pivots[i]] > 0);
            IntegerVector sum(3, 0);
            for (std::size_t j = 0; j < gens.size(); ++j) {
                for (std::size_t c = 0; c < 3; ++c) {
                    sum[c] += h.transform[i][j] * gens[j][c];
                }
            }
            CHECK(sum == h.basis[i]);
        }
        const auto in = lattice::lattice_coordinates(h, {6, 6, 3});
        REQUIRE(in.has_value());
        IntegerVector sum(3, 0);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            for (std::size_t c = 0; c < 3; ++c) {
                sum[c] += (*in)[j] * gens[j][c];
            }
        }
        CHECK(sum == IntegerVector{6, 6, 3});
        CHECK_FALSE(lattice::lattice_coordinates(h, {1, 0, 0}).has_value());

        const std::vector<lattice::RationalVector> m{{1, 2, 3}, {2, 4, 7}, {3, 6, 10}};
        const auto e = lattice::row_echelon(m, 3);
        CHECK(e.rank() == 2);
        CHECK(e.is_pivot(0));
        CHECK_FALSE(e.is_pivot(1));
        CHECK(e.is_pivot(2));
    }
}
