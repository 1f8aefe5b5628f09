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

#include <sstream>
#include <string>
#include <vector>

#include <msing/dsl.hpp>
#include <msing/fixtures.hpp>
#include <msing/serialize.hpp>

#include "commands.hpp"
#include "properties.hpp"

using namespace msing;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "msing");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string &text, const std::string &part)
{
    return text.find(part) != std::string::npos;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("usage errors exit with 2")
    {
        for (const auto &args : std::vector<std::vector<std::string>>{
                 {}, {"--no-such-flag"}, {"derive", "--bogus"}, {"derive", "--dim", "6"}, {"frobnicate"},
                 {"check-parity"}, {"derive", "--json", "--text"}}) {
            const auto r = run(args);
            CHECK(r.code == 2);
            CHECK(contains(r.err + r.out, "Usage"));
        }
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("internal errors exit with 2")
    {
        CHECK(run({"--kernel", "sse9", "jtable"}).code == 2);
        CHECK(run({"--data", "/nonexistent", "jtable"}).code == 2);
        CHECK(run({"check-parity", "--statement", "A2 +* A3+"}).code == 2);
        CHECK(run({"derive", "--dim", "3", "--a1-max", "4"}).code == 2);
        CHECK(run({"verify", "--fixtures", "/nonexistent"}).code == 2);
    }

    TEST_CASE("check-parity")
    {
        const auto r = run({"check-parity", "--statement", "D5+ A2 + D5- A2", "--modulus", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.starts_with("IMPLIED (H0)\n"));
        CHECK(contains(r.out, "verified: yes"));

        const auto no = run({"check-parity", "--statement", "E6+", "--modulus", "2"});
        CHECK(no.code == 1);
        CHECK(no.out.starts_with("NOT_IMPLIED"));

        const auto j = run({"--json", "check-parity", "--collapsed", "--statement", "A4 A3", "--hypothesis", "H0"});
        CHECK(j.code == 0);
        const auto doc = Json::parse(j.out);
        CHECK(doc["result"] == "IMPLIED");
        CHECK(doc["verified"] == true);
        CHECK(doc["statement"] == "A4 A3- + A4 A3+");
    }

    TEST_CASE("derive is deterministic and parses back")
    {
        const auto a = run({"derive", "--dim", "4", "--a1-max", "10", "--parametric"});
        const auto b = run({"derive", "--dim", "4", "--a1-max", "10", "--parametric"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        const auto doc = parse_document(a.out);
        CHECK(doc.lines.size() == testing::derivation(4, 10).parametric.size());
        for (const auto &line : doc.lines) {
            CHECK(line.context.family);
            CHECK(line.context.requires_level.has_value());
        }
        const auto solved = run({"derive", "--dim", "3", "--a1-max", "8"});
        CHECK(solved.code == 0);
        CHECK(parse_document(solved.out).lines.size() == testing::derivation(3, 8).solved.size());
    }

    TEST_CASE("text and JSON agree")
    {
        const auto text = run({"--text", "derive", "--parametric"});
        const auto json = run({"--json", "derive", "--parametric"});
        REQUIRE(text.code == 0);
        REQUIRE(json.code == 0);
        std::vector<ParametricFormula> from_text;
        for (const auto &line : parse_document(text.out).lines) {
            ParametricFormula p;
            p.base = line.lhs.shifted.begin()->first.base;
            p.terms = line.rhs.shifted;
            p.hypothesis = *line.context.requires_level;
            p.hypothesis_at_zero = line.context.requires_at_zero.value_or(p.hypothesis);
            from_text.push_back(std::move(p));
        }
        std::vector<ParametricFormula> from_json;
        const auto parsed = Json::parse(json.out);
        for (const auto &row : parsed["rows"]) {
            from_json.push_back(parametric_from_json(row));
        }
        for (const auto &d : compare("cli", from_text, from_json)) {
            FAIL_CHECK(d.lhs << " | " << d.term << " | " << d.expected << " | " << d.actual);
        }
        CHECK(from_text.size() == 17);

        const auto ca_text = run({"collapse"});
        const auto ca_json = run({"--json", "collapse"});
        std::vector<CaFormula> a, b;
        for (const auto &line : parse_document(ca_text.out).lines) {
            a.push_back({line.lhs.concrete.begin()->first, line.rhs.concrete, *line.context.requires_level,
                         line.context.notation});
        }
        const auto parsed_ca = Json::parse(ca_json.out);
        for (const auto &row : parsed_ca["rows"]) {
            b.push_back(ca_from_json(row));
        }
        for (const auto &d : compare("cli", a, b)) {
            FAIL_CHECK(d.lhs << " | " << d.term << " | " << d.expected << " | " << d.actual);
        }
        CHECK(a.size() == 11);
    }

    TEST_CASE("ca output matches the fixtures")
    {
        const auto r = run({"ca", "--dim", "5"});
        REQUIRE(r.code == 0);
        std::vector<CaFormula> rows;
        for (const auto &line : parse_document(r.out).lines) {
            rows.push_back({line.lhs.concrete.begin()->first, line.rhs.concrete, *line.context.requires_level,
                            line.context.notation});
        }
        CHECK(compare("ca", rows, formulas_of(std::span<const CaFixture>(testing::shipped_fixtures().ca))).empty());
    }

    TEST_CASE("congruences")
    {
        const auto r = run({"congruences"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "GF(2) rank 10"));
        const auto j = run({"--json", "congruences", "--dim", "4", "--hypothesis", "H1"});
        CHECK(j.code == 0);
        CHECK(Json::parse(j.out)["hypothesis"] == "H1");
        CHECK(run({"congruences", "--hypothesis", "H9"}).code == 2);
    }

    TEST_CASE("verify and jtable")
    {
        const auto r = run({"--json", "verify", "--fixtures", default_data_dir().string()});
        const auto doc = Json::parse(r.out);
        for (const auto &s : doc["sections"]) {
            if (s["section"] != "parities") {
                CAPTURE(s.dump());
                CHECK(s["status"] == "pass");
            }
            for (const auto &d : s["diffs"]) {
                for (const char *key : {"section", "lhs", "term", "expected", "actual"}) {
                    CHECK(d.contains(key));
                }
            }
        }
        CHECK(r.code == (doc["ok"] == true ? 0 : 1));

        const auto v = run({"jtable", "--validate"});
        CHECK(v.code == 0);
        CHECK_FALSE(contains(v.out, "FAIL"));
        const auto t = run({"jtable"});
        CHECK(contains(t.out, "J(A2) = 1 + A1^2 - A2\n"));
    }

    TEST_CASE("report")
    {
        const auto r = run({"report"});
        CHECK(contains(r.out, "Isolated point parities"));
        CHECK(contains(r.out, "Classical parities"));
        CHECK(contains(r.out, "A4 A2^2 = 0 (mod 2): IMPLIED (H0)"));
        CHECK((r.code == 0 || r.code == 1));
    }

    TEST_CASE("kernel selection does not change output")
    {
        const auto a = run({"--kernel", "scalar", "collapse"});
        const auto b = run({"collapse"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
