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

#include <msing/verify.hpp>

#include <map>
#include <memory>

#include <msing/dsl.hpp>
#include <msing/error.hpp>
#include <msing/parity.hpp>

namespace msing {

bool VerifyReport::ok() const noexcept
{
    for (const auto &s : sections) {
        if (!s.passed()) {
            return false;
        }
    }
    return true;
}

const SectionReport *VerifyReport::find(const std::string &name) const
{
    for (const auto &s : sections) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

namespace {

SectionReport skipped(const std::string &name, const std::string &why)
{
    SectionReport s{name, true, {}, {why}};
    return s;
}

SectionReport jtable_section(const JTable &table)
{
    SectionReport s{"jtable", false, {}, {}};
    for (const auto &check : validate_jtable(table).checks) {
        for (const auto &f : check.failures) {
            s.diffs.push_back({s.name, check.name, f, "pass", "fail"});
        }
        s.notes.push_back(check.name + ": " + (check.passed ? "pass" : "FAIL"));
    }
    return s;
}

SectionReport diff_section(const std::string &name, std::vector<DiffEntry> diffs, std::size_t rows)
{
    SectionReport s{name, false, std::move(diffs), {}};
    s.notes.push_back(std::to_string(rows) + " rows compared");
    return s;
}

SectionReport congruence_section(const FixtureSet &fx, std::span<const CaFormula> ca)
{
    SectionReport s{"congruences", false, {}, {}};
    const auto raw = raw_congruences(ca, Hypothesis::H0);
    const auto basis = gf2_basis(raw);
    s.notes.push_back(std::to_string(raw.size()) + " raw H0 congruences, GF(2) rank " + std::to_string(basis.rank()));
    for (const auto &c : fx.congruences) {
        const auto combo = gf2_combination(raw, c.congruence);
        if (!combo) {
            s.diffs.push_back({s.name, c.text, "(GF(2) span)", "in span", "not in span"});
            continue;
        }
        std::string witness;
        for (const auto i : *combo) {
            witness += (witness.empty() ? "" : ", ") + format_type(*raw[i].origin);
        }
        s.notes.push_back(c.text + " <= rows {" + witness + "}");
    }
    return s;
}

std::string level_text(const std::optional<Hypothesis> &h)
{
    return h ? "IMPLIED (" + std::string(to_string(*h)) + ")" : "NOT_IMPLIED";
}

void parity_checks(SectionReport &s, std::span<const ParityFixture> rows, std::span<const CaFormula> ca, int dim)
{
    std::vector<ParityStatement> statements;
    std::vector<const ParityFixture *> used;
    for (const auto &r : rows) {
        if (r.dim == dim) {
            statements.push_back(r.statement);
            used.push_back(&r);
        }
    }
    const auto verdicts = report_isolated_point_parities(ca, statements, dim);
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto &v = verdicts[i];
        const auto want = used[i]->level;
        const bool good = v.level && *v.level <= want && v.result.verified;
        const auto label = v.statement.label + " = 0 (mod " + to_string(v.statement.modulus) + ")";
        s.notes.push_back("dim " + std::to_string(dim) + ": " + label + ": " + level_text(v.level));
        if (!good) {
            s.diffs.push_back({s.name, label, "(dim " + std::to_string(dim) + ")",
                               "IMPLIED (" + std::string(to_string(want)) + ")", level_text(v.level)});
        }
    }
}

} // namespace

VerifyReport verify(const FixtureSet &fx, int dim, int a1_max)
{
    if (dim < 3 || dim > 5) {
        throw Error("dim must be 3, 4 or 5");
    }
    VerifyReport report;
    report.dim = dim;
    report.a1_max = a1_max;

    report.sections.push_back(jtable_section(fx.jtable));
    const JEvaluator j(std::make_shared<const JTable>(fx.jtable));

    std::map<int, Derivation> derived;
    const auto derivation = [&](int n) -> const Derivation & {
        auto it = derived.find(n);
        if (it == derived.end()) {
            it = derived.emplace(n, derive(j, n, a1_max)).first;
        }
        return it->second;
    };

    const auto &main = derivation(dim);
    {
        SectionReport s{"residual", false, {}, {}};
        for (const auto &r : residuals(main.solved, main.system)) {
            s.diffs.push_back({s.name, format_type(r.index), "(residual)", "0", to_string(r.value)});
        }
        s.notes.push_back(std::to_string(main.system.equations.size()) + " equations at dim " +
                          std::to_string(dim) + ", K = " + std::to_string(a1_max));
        report.sections.push_back(std::move(s));
    }

    const auto fixture_param = formulas_of(std::span<const ParametricFixture>(fx.parametric));
    const auto fixture_ca = formulas_of(std::span<const CaFixture>(fx.ca));
    const auto fixture_collapsed = formulas_of(std::span<const CaFixture>(fx.collapsed));

    if (dim == 5) {
        report.sections.push_back(
            diff_section("families", compare("families", main.parametric, fixture_param), fixture_param.size()));
        report.sections.push_back(diff_section("ca", compare("ca", main.ca, fixture_ca), fixture_ca.size()));
        const auto collapsed = collapse_signs(main.ca);
        report.sections.push_back(
            diff_section("collapsed", compare("collapsed", collapsed, fixture_collapsed), fixture_collapsed.size()));
        report.sections.push_back(congruence_section(fx, main.ca));
        SectionReport parity{"parities", false, {}, {}};
        parity_checks(parity, fx.parities, main.ca, 5);
        report.sections.push_back(std::move(parity));
    }
    else {
        for (const auto *name : {"families", "ca", "collapsed", "congruences", "parities"}) {
            report.sections.push_back(skipped(name, "fixtures are stated for dim 5"));
        }
    }

    SectionReport classical{"classical", false, {}, {}};
    for (const int n : {3, 4}) {
        parity_checks(classical, fx.classical, derivation(n).ca, n);
    }
    report.sections.push_back(std::move(classical));

    report.sections.push_back(diff_section("telescoping", telescoping_check(fixture_param, fixture_ca),
                                           fixture_param.size()));
    report.sections.push_back(diff_section("fixture-collapse",
                                           compare("fixture-collapse", collapse_signs(fixture_ca), fixture_collapsed),
                                           fixture_collapsed.size()));
    return report;
}

} // namespace msing
