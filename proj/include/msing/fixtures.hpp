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


#ifndef MSING_FIXTURES_HPP
#define MSING_FIXTURES_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <msing/formula.hpp>
#include <msing/jtable.hpp>
#include <msing/parity.hpp>

namespace msing {

// Where a transcribed row came from.
struct Provenance {
    std::string file;
    std::string source;
    std::size_t line = 0;
    int group = 0;
    std::string group_label;
};

struct ParametricFixture {
    ParametricFormula formula;
    Provenance origin;
};

struct CaFixture {
    CaFormula formula;
    Provenance origin;
};

struct CongruenceFixture {
    Congruence congruence;
    std::string text;
    Provenance origin;
};

struct ParityFixture {
    ParityStatement statement;
    int dim = 5;
    Hypothesis level = Hypothesis::H0;
    Provenance origin;
};

struct FixtureSet {
    JTable jtable;
    // Parametric family rows B A1^{k}.
    std::vector<ParametricFixture> parametric;
    // ca rows, signed notation.
    std::vector<CaFixture> ca;
    // ca rows, collapsed notation.
    std::vector<CaFixture> collapsed;
    std::vector<CongruenceFixture> congruences;
    // Isolated point parities in dimension 5.
    std::vector<ParityFixture> parities;
    // Parities in dimensions 3 and 4.
    std::vector<ParityFixture> classical;
};

// Number of distinct groups among rows from the given source tag.
template <class Row>
std::size_t count_families(std::span<const Row> rows, const std::string &source)
{
    std::vector<int> seen;
    for (const auto &r : rows) {
        if (r.origin.source == source &&
            std::find(seen.begin(), seen.end(), r.origin.group) == seen.end()) {
            seen.push_back(r.origin.group);
        }
    }
    return seen.size();
}

// Loads every fixture file in dir and checks the expected row and family
// counts. Throws ParseError (with the file name) or Error.
FixtureSet load_fixtures(const std::filesystem::path &dir);

struct DiffEntry {
    std::string section;
    std::string lhs;
    std::string term;
    std::string expected;
    std::string actual;
};

// Coefficient-wise comparison keyed by lhs; also compares hypotheses.
std::vector<DiffEntry> compare(const std::string &section, std::span<const ParametricFormula> derived,
                               std::span<const ParametricFormula> fixture);
std::vector<DiffEntry> compare(const std::string &section, std::span<const CaFormula> derived,
                               std::span<const CaFormula> fixture);

std::vector<ParametricFormula> formulas_of(std::span<const ParametricFixture> rows);
std::vector<CaFormula> formulas_of(std::span<const CaFixture> rows);

// Sums each parametric row over k = 0..k_max and compares the
// coefficients of B * A1^j (for j small enough to be complete) with the
// ca row of the same lhs.
std::vector<DiffEntry> telescoping_check(std::span<const ParametricFormula> parametric,
                                         std::span<const CaFormula> ca, int k_max = 40);

} // namespace msing

#endif
