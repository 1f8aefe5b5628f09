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

using namespace msing;

TEST_SUITE("dsl")
{
    TEST_CASE("expressions")
    {
        const auto e = parse_element("1/2*D5+ A2 - 3*A4 + 2 - A2");
        CHECK(e.coefficient(parse_type("D5+ A2")) == Rational(1, 2));
        CHECK(e.coefficient(parse_type("A4")) == -3);
        CHECK(e.coefficient(Monomial::unit()) == 2);
        CHECK(e.coefficient(parse_type("A2")) == -1);
        CHECK(parse_element("-A2 + A2").is_zero());
        CHECK(parse_element("0").is_zero());
    }

    TEST_CASE("format round trip")
    {
        for (const char *text : {"1", "A2 - 1/2*A3+", "-3/4*E6- + 2*D4+ A2^2 + A1^4", "0"}) {
            const auto e = parse_element(text);
            CHECK(parse_element(format_element(e)) == e);
        }
        CHECK(format_element(parse_element("A2 + 1")) == "1 + A2");
        const auto c = parse_element("1/2*A4 A3 + D5 A2", Notation::collapsed);
        CHECK(format_element(c, Notation::collapsed) == "1/2*A4 A3 + D5 A2");
    }

    TEST_CASE("symbolic exponents")
    {
        const auto e = parse_expression("1/2*D5+ A2 A1^{k} + A1^{k-2} A3+ - E6+ A1^{k-1}", Notation::signed_types, true);
        CHECK(e.symbolic);
        CHECK(e.shifted.size() == 3);
        CHECK(e.shifted.at(ShiftKey{parse_type("A3+"), 2}) == 1);
        CHECK(e.shifted.at(ShiftKey{parse_type("E6+"), 1}) == -1);
        CHECK(format_shifted_type(parse_type("D5+ A2"), 3) == "D5+ A2 A1^{k-3}");
        CHECK(format_shifted_type(Monomial::unit(), 0) == "A1^{k}");
        CHECK_THROWS_AS(parse_element("A2 A1^{k}"), ParseError);
        CHECK_THROWS_AS(parse_expression("A2^{k}", Notation::signed_types, true), ParseError);
        // Inside a family every term carries A1^{k-s}.
        CHECK_THROWS_AS(parse_expression("A2 A1^{k} + A3+", Notation::signed_types, true), ParseError);
    }

    TEST_CASE("documents")
    {
        const auto doc = parse_document("# comment\n"
                                        "@dim 5\n"
                                        "@source t\n"
                                        "@group first\n"
                                        "@requires H1\n"
                                        "@requires-k0 H2\n"
                                        "@family k\n"
                                        "A1^{k} = 1/2*A2 A1^{k}   # trailing\n"
                                        "@concrete\n"
                                        "@requires H0\n"
                                        "@group second\n"
                                        "A2 = A3+\n"
                                        "@modulus 2\n"
                                        "A4 + A2\n");
        REQUIRE(doc.lines.size() == 3);
        const auto &a = doc.lines[0];
        CHECK(a.line == 8);
        CHECK(a.context.family);
        CHECK(a.context.dim == 5);
        CHECK(a.context.requires_level == Hypothesis::H1);
        CHECK(a.context.requires_at_zero == Hypothesis::H2);
        CHECK(a.context.group == "first");
        CHECK(a.lhs.shifted.size() == 1);
        const auto &b = doc.lines[1];
        CHECK_FALSE(b.context.family);
        CHECK(b.context.requires_level == Hypothesis::H0);
        CHECK_FALSE(b.context.requires_at_zero.has_value());
        CHECK(b.context.group_id == a.context.group_id + 1);
        CHECK(b.has_lhs);
        const auto &c = doc.lines[2];
        CHECK_FALSE(c.has_lhs);
        CHECK(c.context.modulus == 2);
        CHECK(c.rhs.concrete == parse_element("A2 + A4"));
    }

    TEST_CASE("errors carry positions")
    {
        try {
            parse_document("@dim 5\nA2 = A3+ + * A4\n");
            FAIL("expected a parse error");
        }
        catch (const ParseError &e) {
            CHECK(e.line() == 2);
            CHECK(e.column() > 1);
        }
        CHECK_THROWS_AS(parse_document("@frobnicate 3\n"), ParseError);
        CHECK_THROWS_AS(parse_document("@requires H7\n"), ParseError);
        CHECK_THROWS_AS(parse_document("A2 = A3+ = A4\n"), ParseError);
        CHECK_THROWS_AS(parse_element("1/0*A2"), ParseError);
    }
}
