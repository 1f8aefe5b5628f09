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

#include <msing/fixtures.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <msing/dsl.hpp>
#include <msing/error.hpp>

namespace msing {

namespace {

struct LoadedFile {
    std::string name;
    DslDocument doc;
};

std::string read_file(const std::filesystem::path &file)
{
    std::ifstream in(file);
    if (!in) {
        throw Error("cannot open fixture file " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LoadedFile load(const std::filesystem::path &dir, const std::string &name)
{
    const auto text = read_file(dir / name);
    try {
        return {name, parse_document(text)};
    }
    catch (const ParseError &e) {
        throw ParseError(name + ": " + e.what(), e.line(), e.column());
    }
}

[[noreturn]] void fail_line(const LoadedFile &f, const DslLine &line, const std::string &what)
{
    throw ParseError(f.name + ": " + what, line.line, 1);
}

Provenance provenance(const LoadedFile &f, const DslLine &line)
{
    return {f.name, line.context.source, line.line, line.context.group_id, line.context.group};
}

Hypothesis required_level(const LoadedFile &f, const DslLine &line)
{
    if (!line.context.requires_level) {
        fail_line(f, line, "row without @requires");
    }
    return *line.context.requires_level;
}

// A single type with coefficient 1.
Monomial single_type(const LoadedFile &f, const DslLine &line, const AlgebraElement &e)
{
    if (e.size() != 1 || e.begin()->second != 1) {
        fail_line(f, line, "left-hand side must be a single type");
    }
    return e.begin()->first;
}

template <class Rows>
void expect_counts(const std::string &file, const Rows &rows, const std::string &source, std::size_t families,
                   std::size_t total)
{
    std::size_t n = 0;
    for (const auto &r : rows) {
        n += r.origin.source == source ? 1 : 0;
    }
    using Row = typename Rows::value_type;
    const auto fam = count_families<Row>(rows, source);
    if (fam != families || n != total) {
        throw Error(file + ": expected " + std::to_string(families) + " families / " + std::to_string(total) +
                    " rows, found " + std::to_string(fam) + " / " + std::to_string(n));
    }
}

void load_parametric(const LoadedFile &f, std::vector<ParametricFixture> &out)
{
    for (const auto &line : f.doc.lines) {
        if (!line.has_lhs || !line.context.family) {
            fail_line(f, line, "expected a family row 'B A1^{k} = ...' under @family k");
        }
        const auto &lhs = line.lhs.shifted;
        if (lhs.size() != 1 || lhs.begin()->first.shift != 0 || lhs.begin()->second != 1) {
            fail_line(f, line, "left-hand side must be a single type with A1^{k}");
        }
        ParametricFixture p;
        p.formula.base = lhs.begin()->first.base;
        p.formula.terms = line.rhs.shifted;
        p.formula.hypothesis = required_level(f, line);
        p.formula.hypothesis_at_zero = line.context.requires_at_zero.value_or(p.formula.hypothesis);
        p.origin = provenance(f, line);
        out.push_back(std::move(p));
    }
}

void load_ca(const LoadedFile &f, std::vector<CaFixture> &out)
{
    for (const auto &line : f.doc.lines) {
        if (!line.has_lhs || line.context.family) {
            fail_line(f, line, "expected a concrete row 'B = ...'");
        }
        CaFixture c;
        c.formula.lhs = single_type(f, line, line.lhs.concrete);
        if (c.formula.lhs.a1_degree() != 0) {
            fail_line(f, line, "ca rows are written over A1-free types");
        }
        c.formula.rhs = line.rhs.concrete;
        c.formula.hypothesis = required_level(f, line);
        c.formula.notation = line.context.notation;
        c.origin = provenance(f, line);
        out.push_back(std::move(c));
    }
}

Integer modulus_of(const LoadedFile &f, const DslLine &line)
{
    if (!line.context.modulus) {
        fail_line(f, line, "row without @modulus");
    }
    return *line.context.modulus;
}

void load_congruences(const LoadedFile &f, std::vector<CongruenceFixture> &out)
{
    for (const auto &line : f.doc.lines) {
        if (!line.has_lhs || modulus_of(f, line) != 2) {
            fail_line(f, line, "expected 'lhs = rhs' under @modulus 2");
        }
        const auto diff = line.lhs.concrete - line.rhs.concrete;
        std::vector<Monomial> support;
        for (const auto &[m, c] : diff) {
            if (!is_integer(c)) {
                fail_line(f, line, "congruence coefficients must be integers");
            }
            if (mpz_odd_p(c.get_num_mpz_t())) {
                support.push_back(m);
            }
        }
        CongruenceFixture c;
        c.congruence = Congruence::of(std::move(support));
        c.text = format_element(line.lhs.concrete) + " = " + format_element(line.rhs.concrete) + " (mod 2)";
        c.origin = provenance(f, line);
        out.push_back(std::move(c));
    }
}

void load_parities(const LoadedFile &f, std::vector<ParityFixture> &out)
{
    for (const auto &line : f.doc.lines) {
        if (line.has_lhs || line.context.family) {
            fail_line(f, line, "expected a bare linear combination");
        }
        if (!line.context.dim) {
            fail_line(f, line, "row without @dim");
        }
        ParityFixture p;
        const auto &e = line.rhs.concrete;
        p.statement.label = format_element(e, line.context.notation);
        p.statement.ell = line.context.notation == Notation::collapsed ? expand_collapsed(e) : e;
        p.statement.modulus = modulus_of(f, line);
        p.dim = *line.context.dim;
        p.level = required_level(f, line);
        p.origin = provenance(f, line);
        out.push_back(std::move(p));
    }
}

} // namespace

FixtureSet load_fixtures(const std::filesystem::path &dir)
{
    if (!std::filesystem::is_directory(dir)) {
        throw Error("fixture directory " + dir.string() + " does not exist");
    }
    FixtureSet set;

    try {
        set.jtable = JTable::parse(read_file(dir / "jtable.txt"));
    }
    catch (const ParseError &e) {
        throw ParseError(std::string("jtable.txt: ") + e.what(), e.line(), e.column());
    }
    if (set.jtable.size() != generator_count) {
        throw Error("jtable.txt: expected 16 entries, found " + std::to_string(set.jtable.size()));
    }

    load_parametric(load(dir, "families.txt"), set.parametric);
    expect_counts("families.txt", set.parametric, "families", 11, 17);

    load_ca(load(dir, "ca.txt"), set.ca);
    expect_counts("ca.txt", set.ca, "ca", 11, 17);

    load_ca(load(dir, "collapsed.txt"), set.collapsed);
    expect_counts("collapsed.txt", set.collapsed, "collapsed", 10, 11);

    load_congruences(load(dir, "congruences.txt"), set.congruences);
    expect_counts("congruences.txt", set.congruences, "congruences", 9, 10);

    load_parities(load(dir, "parities.txt"), set.parities);
    if (set.parities.size() != 5) {
        throw Error("parities.txt: expected 5 statements, found " + std::to_string(set.parities.size()));
    }
    load_parities(load(dir, "classical.txt"), set.classical);
    if (set.classical.size() != 5) {
        throw Error("classical.txt: expected 5 statements, found " + std::to_string(set.classical.size()));
    }
    return set;
}

std::vector<ParametricFormula> formulas_of(std::span<const ParametricFixture> rows)
{
    std::vector<ParametricFormula> out;
    for (const auto &r : rows) {
        out.push_back(r.formula);
    }
    return out;
}

std::vector<CaFormula> formulas_of(std::span<const CaFixture> rows)
{
    std::vector<CaFormula> out;
    for (const auto &r : rows) {
        out.push_back(r.formula);
    }
    return out;
}

namespace {

std::string coeff_text(const Rational &c)
{
    return to_string(c);
}

template <class Row, class Key, class Terms, class KeyText>
void diff_rows(const std::string &section, const std::string &lhs, const Terms &derived, const Terms &fixture,
               KeyText key_text, std::vector<DiffEntry> &out)
{
    std::set<Key> keys;
    for (const auto &[k, c] : derived) {
        keys.insert(k);
    }
    for (const auto &[k, c] : fixture) {
        keys.insert(k);
    }
    for (const auto &k : keys) {
        const auto d = derived.find(k);
        const auto f = fixture.find(k);
        const Rational dc = d == derived.end() ? Rational(0) : d->second;
        const Rational fc = f == fixture.end() ? Rational(0) : f->second;
        if (dc != fc) {
            out.push_back({section, lhs, key_text(k), coeff_text(fc), coeff_text(dc)});
        }
    }
}

void diff_hypothesis(const std::string &section, const std::string &lhs, const std::string &term, Hypothesis derived,
                     Hypothesis fixture, std::vector<DiffEntry> &out)
{
    if (derived != fixture) {
        out.push_back({section, lhs, term, std::string(to_string(fixture)), std::string(to_string(derived))});
    }
}

template <class Formula, class Lhs>
std::map<Monomial, const Formula *> index_rows(std::span<const Formula> rows, Lhs lhs_of)
{
    std::map<Monomial, const Formula *> out;
    for (const auto &r : rows) {
        out.emplace(lhs_of(r), &r);
    }
    return out;
}

} // namespace

std::vector<DiffEntry> compare(const std::string &section, std::span<const ParametricFormula> derived,
                               std::span<const ParametricFormula> fixture)
{
    const auto lhs_of = [](const ParametricFormula &p) { return p.base; };
    const auto d = index_rows(derived, lhs_of);
    const auto f = index_rows(fixture, lhs_of);
    std::set<Monomial> all;
    for (const auto &[m, p] : d) {
        all.insert(m);
    }
    for (const auto &[m, p] : f) {
        all.insert(m);
    }
    std::vector<DiffEntry> out;
    for (const auto &m : all) {
        const auto lhs = format_shifted_type(m, 0);
        const auto di = d.find(m);
        const auto fi = f.find(m);
        if (di == d.end() || fi == f.end()) {
            out.push_back({section, lhs, "(row)", fi == f.end() ? "absent" : "present",
                           di == d.end() ? "absent" : "present"});
            continue;
        }
        diff_rows<ParametricFormula, ShiftKey>(section, lhs, di->second->terms, fi->second->terms,
                                               [](const ShiftKey &k) { return format_shifted_type(k.base, k.shift); },
                                               out);
        diff_hypothesis(section, lhs, "(hypothesis, k > 0)", di->second->hypothesis, fi->second->hypothesis, out);
        diff_hypothesis(section, lhs, "(hypothesis, k = 0)", di->second->hypothesis_at_zero,
                        fi->second->hypothesis_at_zero, out);
    }
    return out;
}

std::vector<DiffEntry> compare(const std::string &section, std::span<const CaFormula> derived,
                               std::span<const CaFormula> fixture)
{
    const auto lhs_of = [](const CaFormula &c) { return c.lhs; };
    const auto d = index_rows(derived, lhs_of);
    const auto f = index_rows(fixture, lhs_of);
    std::set<Monomial> all;
    for (const auto &[m, p] : d) {
        all.insert(m);
    }
    for (const auto &[m, p] : f) {
        all.insert(m);
    }
    std::vector<DiffEntry> out;
    for (const auto &m : all) {
        const auto di = d.find(m);
        const auto fi = f.find(m);
        const auto notation = (fi != f.end() ? fi->second : di->second)->notation;
        const auto lhs = format_type(m, notation);
        if (di == d.end() || fi == f.end()) {
            out.push_back({section, lhs, "(row)", fi == f.end() ? "absent" : "present",
                           di == d.end() ? "absent" : "present"});
            continue;
        }
        if (di->second->notation != fi->second->notation) {
            out.push_back({section, lhs, "(notation)", "", ""});
            continue;
        }
        diff_rows<CaFormula, Monomial>(section, lhs, di->second->rhs.terms(), fi->second->rhs.terms(),
                                       [notation](const Monomial &k) { return format_type(k, notation); }, out);
        diff_hypothesis(section, lhs, "(hypothesis)", di->second->hypothesis, fi->second->hypothesis, out);
    }
    return out;
}

std::vector<DiffEntry> telescoping_check(std::span<const ParametricFormula> parametric, std::span<const CaFormula> ca,
                                         int k_max)
{
    const std::string section = "telescoping";
    std::vector<DiffEntry> out;
    for (const auto &p : parametric) {
        const CaFormula *row = nullptr;
        for (const auto &c : ca) {
            if (c.lhs == p.base) {
                row = &c;
            }
        }
        const auto lhs = format_type(p.base);
        if (row == nullptr) {
            out.push_back({section, lhs, "(row)", "present", "absent"});
            continue;
        }
        AlgebraElement sum;
        for (int k = 0; k <= k_max; ++k) {
            sum += p.instantiate(k);
        }
        std::set<Monomial> bases;
        for (const auto &[key, c] : p.terms) {
            bases.insert(key.base);
        }
        for (const auto &[m, c] : row->rhs) {
            bases.insert(m);
        }
        // A1^j collects every shift in full once j + max_shift <= k_max.
        for (int j = 0; j + p.max_shift() <= k_max; ++j) {
            for (const auto &b : bases) {
                const auto got = sum.coefficient(b.with_a1(j));
                const auto want = row->rhs.coefficient(b);
                if (got != want) {
                    out.push_back({section, lhs, format_type(b.with_a1(j)), to_string(want), to_string(got)});
                }
            }
        }
    }
    return out;
}

} // namespace msing
