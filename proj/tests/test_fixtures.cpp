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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <msing/dsl.hpp>
#include <msing/error.hpp>
#include <msing/fixtures.hpp>
#include <msing/verify.hpp>

#include "properties.hpp"

using namespace msing;
namespace fs = std::filesystem;

namespace {

// A private copy of the shipped data directory.
class DataCopy {
public:
    DataCopy()
    {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("msing-fixtures-" + std::to_string(rd()));
        fs::create_directories(path_);
        fs::copy(default_data_dir(), path_, fs::copy_options::recursive);
    }
    ~DataCopy()
    {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    DataCopy(const DataCopy &) = delete;
    DataCopy &operator=(const DataCopy &) = delete;

    const fs::path &path() const
    {
        return path_;
    }

    std::string read(const std::string &name) const
    {
        std::ifstream in(path_ / name);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write(const std::string &name, const std::string &text) const
    {
        std::ofstream(path_ / name) << text;
    }

    // Replaces the first occurrence of from in file name.
    void edit(const std::string &name, const std::string &from, const std::string &to) const
    {
        auto text = read(name);
        const auto at = text.find(from);
        REQUIRE(at != std::string::npos);
        text.replace(at, from.size(), to);
        write(name, text);
    }

private:
    fs::path path_;
};

} // namespace

TEST_SUITE("fixtures")
{
    TEST_CASE("shipped fixtures load with the expected counts")
    {
        const auto &fx = testing::shipped_fixtures();
        CHECK(fx.jtable.size() == 16);
        CHECK(fx.parametric.size() == 17);
        CHECK(count_families<ParametricFixture>(fx.parametric, "families") == 11);
        CHECK(fx.ca.size() == 17);
        CHECK(count_families<CaFixture>(fx.ca, "ca") == 11);
        CHECK(fx.collapsed.size() == 11);
        CHECK(fx.congruences.size() == 10);
        CHECK(count_families<CongruenceFixture>(fx.congruences, "congruences") == 9);
        CHECK(fx.parities.size() == 5);
        CHECK(fx.classical.size() == 5);
        for (const auto &p : fx.parametric) {
            CHECK(p.origin.file == "families.txt");
            CHECK(p.origin.line > 0);
        }
        CHECK(fx.collapsed.back().formula.hypothesis == Hypothesis::H2);
        for (std::size_t i = 0; i + 1 < fx.collapsed.size(); ++i) {
            CHECK(fx.collapsed[i].formula.hypothesis == Hypothesis::H0);
        }
    }

    TEST_CASE("missing or empty directories are errors")
    {
        CHECK_THROWS_AS(load_fixtures("/nonexistent/msing"), Error);
        DataCopy copy;
        for (const auto &e : fs::directory_iterator(copy.path())) {
            fs::remove(e.path());
        }
        CHECK_THROWS_AS(load_fixtures(copy.path()), Error);
    }

    TEST_CASE("parse errors name the file and line")
    {
        DataCopy copy;
        copy.edit("ca.txt", "D5+ = ", "D5+ = = ");
        try {
            load_fixtures(copy.path());
            FAIL("expected a parse error");
        }
        catch (const ParseError &e) {
            CHECK(std::string(e.what()).find("ca.txt") != std::string::npos);
            CHECK(e.line() > 1);
        }
    }

    TEST_CASE("count mismatches are errors")
    {
        DataCopy copy;
        auto text = copy.read("ca.txt");
        text = text.substr(0, text.rfind("@group"));
        copy.write("ca.txt", text);
        CHECK_THROWS_WITH_AS(load_fixtures(copy.path()), doctest::Contains("ca.txt"), Error);
    }

    TEST_CASE("a single altered coefficient gives a single diff")
    {
        DataCopy copy;
        const auto original = copy.read("ca.txt");
        REQUIRE(original.find("5/2*") != std::string::npos);
        copy.edit("ca.txt", "5/2*", "3/2*");
        const auto fx = load_fixtures(copy.path());
        const auto &derived = testing::derivation(5).ca;
        const auto diffs = compare("ca", derived, formulas_of(std::span<const CaFixture>(fx.ca)));
        REQUIRE(diffs.size() == 1);
        CHECK(diffs[0].expected == "-3/2");
        CHECK(diffs[0].actual == "-5/2");
        CHECK(diffs[0].section == "ca");
        // The telescoping cross-check catches it without the engine.
        CHECK_FALSE(telescoping_check(formulas_of(std::span<const ParametricFixture>(fx.parametric)),
                                      formulas_of(std::span<const CaFixture>(fx.ca)))
                        .empty());
    }

    TEST_CASE("rows on one side only are differences")
    {
        const auto &derived = testing::derivation(5).ca;
        auto fewer = formulas_of(std::span<const CaFixture>(testing::shipped_fixtures().ca));
        fewer.pop_back();
        const auto diffs = compare("x", derived, fewer);
        REQUIRE(diffs.size() == 1);
        CHECK(diffs[0].term == "(row)");
    }

    TEST_CASE("hypothesis tags are compared")
    {
        auto rows = formulas_of(std::span<const CaFixture>(testing::shipped_fixtures().ca));
        rows.front().hypothesis = Hypothesis::H1;
        CHECK(compare("x", testing::derivation(5).ca, rows).size() == 1);
    }

    TEST_CASE("fixture self-consistency")
    {
        for (const auto &r : {testing::fixture_telescoping(testing::shipped_fixtures()),
                              testing::fixture_collapse(testing::shipped_fixtures())}) {
            for (const auto &f : r.failures) {
                FAIL_CHECK(f);
            }
            CHECK(r.cases > 0);
        }
    }

    TEST_CASE("derived rows match the fixtures")
    {
        const auto report = verify(testing::shipped_fixtures());
        for (const char *name : {"jtable", "residual", "families", "ca", "collapsed", "congruences", "classical",
                                 "telescoping", "fixture-collapse"}) {
            CAPTURE(name);
            const auto *s = report.find(name);
            REQUIRE(s != nullptr);
            CHECK_FALSE(s->skipped);
            CHECK(s->diffs.empty());
        }
        REQUIRE(report.find("parities") != nullptr);
    }

    TEST_CASE("other dimensions skip the dim 5 fixtures")
    {
        const auto report = verify(testing::shipped_fixtures(), 4);
        CHECK(report.find("ca")->skipped);
        CHECK(report.find("residual")->diffs.empty());
        CHECK(report.find("classical")->diffs.empty());
        CHECK_THROWS(verify(testing::shipped_fixtures(), 6));
    }
}
