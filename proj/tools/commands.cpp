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

#include "commands.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <msing/dsl.hpp>
#include <msing/error.hpp>
#include <msing/fixtures.hpp>
#include <msing/jtable.hpp>
#include <msing/kernels.hpp>
#include <msing/parity.hpp>
#include <msing/relations.hpp>
#include <msing/serialize.hpp>
#include <msing/verify.hpp>

namespace msing::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_error = 2;

struct Options {
    bool json = false;
    std::string data = default_data_dir().string();
    std::string kernel = "auto";
    int dim = 5;
    int a1_max = default_a1_max;
    bool parametric = false;
    std::string hypothesis;
    std::string statement;
    int modulus = 2;
    bool collapsed = false;
    std::string fixtures;
    bool validate = false;
};

std::optional<Hypothesis> hypothesis_option(const std::string &text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    const auto h = parse_hypothesis(text);
    if (!h) {
        throw CLI::ValidationError("--hypothesis", "expected H0, H1 or H2");
    }
    return h;
}

std::shared_ptr<const JTable> load_jtable(const Options &o)
{
    return std::make_shared<const JTable>(JTable::load(std::filesystem::path(o.data) / "jtable.txt"));
}

Derivation derive_for(const Options &o)
{
    const JEvaluator j(load_jtable(o));
    return derive(j, o.dim, o.a1_max);
}

void print_json(std::ostream &out, const Json &j)
{
    out << j.dump(2) << '\n';
}

std::string requires_line(Hypothesis h)
{
    return "@requires " + std::string(to_string(h));
}

// Emits "@requires" only when the level changes, so the text parses back
// with the same tags.
template <class Row, class Level, class Text>
void print_rows(std::ostream &out, const std::vector<Row> &rows, Level level, Text text)
{
    std::string current;
    for (const auto &r : rows) {
        const auto directive = level(r);
        if (directive != current) {
            out << directive << '\n';
            current = directive;
        }
        out << text(r) << '\n';
    }
}

int cmd_derive(const Options &o, std::ostream &out)
{
    const auto d = derive_for(o);
    if (o.json) {
        Json rows = Json::array();
        if (o.parametric) {
            for (const auto &p : d.parametric) {
                rows.push_back(to_json(p));
            }
        }
        else {
            for (const auto &s : d.solved) {
                rows.push_back(to_json(s));
            }
        }
        print_json(out, {{"dim", o.dim}, {"a1_max", o.a1_max}, {"parametric", o.parametric}, {"rows", rows}});
        return exit_ok;
    }
    out << "@dim " << o.dim << '\n';
    if (o.parametric) {
        out << "@family k\n";
        print_rows(
            out, d.parametric,
            [](const ParametricFormula &p) {
                auto line = requires_line(p.hypothesis);
                if (p.hypothesis_at_zero != p.hypothesis) {
                    line += "\n@requires-k0 " + std::string(to_string(p.hypothesis_at_zero));
                }
                return line;
            },
            [](const ParametricFormula &p) { return to_dsl(p); });
    }
    else {
        out << "@a1-max " << o.a1_max << '\n';
        print_rows(
            out, d.solved, [](const SolvedFormula &s) { return requires_line(s.hypothesis); },
            [](const SolvedFormula &s) { return to_dsl(s); });
    }
    return exit_ok;
}

int print_ca(const Options &o, std::ostream &out, const std::vector<CaFormula> &rows)
{
    if (o.json) {
        Json list = Json::array();
        for (const auto &r : rows) {
            list.push_back(to_json(r));
        }
        print_json(out, {{"dim", o.dim}, {"rows", list}});
        return exit_ok;
    }
    out << "@dim " << o.dim << '\n';
    if (!rows.empty() && rows.front().notation == Notation::collapsed) {
        out << "@collapsed\n";
    }
    print_rows(
        out, rows, [](const CaFormula &c) { return requires_line(c.hypothesis); },
        [](const CaFormula &c) { return to_dsl(c); });
    return exit_ok;
}

int cmd_ca(const Options &o, std::ostream &out)
{
    return print_ca(o, out, derive_for(o).ca);
}

int cmd_collapse(const Options &o, std::ostream &out)
{
    return print_ca(o, out, collapse_signs(derive_for(o).ca));
}

int cmd_congruences(const Options &o, std::ostream &out)
{
    const auto level = hypothesis_option(o.hypothesis).value_or(Hypothesis::H0);
    const auto raw = raw_congruences(derive_for(o).ca, level);
    const auto basis = gf2_basis(raw);
    const auto reduced = basis_congruences(basis);
    if (o.json) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            Json support = Json::array();
            for (const auto &m : reduced[i].support) {
                support.push_back(format_type(m));
            }
            Json from = Json::array();
            for (const auto k : basis.combination[i]) {
                from.push_back(format_type(*raw[k].origin));
            }
            rows.push_back({{"support", support}, {"rows", from}});
        }
        print_json(out, {{"dim", o.dim},
                         {"hypothesis", std::string(to_string(level))},
                         {"raw", raw.size()},
                         {"rank", basis.rank()},
                         {"basis", rows}});
        return exit_ok;
    }
    out << "# " << raw.size() << " raw congruences at " << to_string(level) << ", GF(2) rank " << basis.rank()
        << '\n';
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        out << format_congruence(reduced[i]) << "    # rows:";
        for (const auto k : basis.combination[i]) {
            out << ' ' << '[' << format_type(*raw[k].origin) << ']';
        }
        out << '\n';
    }
    return exit_ok;
}

int cmd_check_parity(const Options &o, std::ostream &out)
{
    if (o.modulus < 1) {
        throw CLI::ValidationError("--modulus", "must be positive");
    }
    const auto notation = o.collapsed ? Notation::collapsed : Notation::signed_types;
    const auto parsed = parse_element(o.statement, notation);
    const auto ell = o.collapsed ? expand_collapsed(parsed) : parsed;
    const Integer d = o.modulus;
    const auto ca = derive_for(o).ca;

    std::vector<Hypothesis> levels{Hypothesis::H0, Hypothesis::H1, Hypothesis::H2};
    if (const auto h = hypothesis_option(o.hypothesis)) {
        levels.assign(1, *h);
    }
    for (const auto level : levels) {
        const auto lattice = make_lattice(ca, level, o.dim);
        const auto r = divisibility_oracle(lattice, ell, d);
        if (!r.implied) {
            continue;
        }
        Json witness = Json::array();
        std::string text;
        for (std::size_t i = 0; i < r.lambda.size(); ++i) {
            if (r.lambda[i] == 0) {
                continue;
            }
            const auto label = format_type(lattice.row_labels[i]);
            witness.push_back({{"row", label}, {"coeff", to_string(r.lambda[i])}});
            text += "  " + to_string(r.lambda[i]) + " * [" + label + " row]\n";
        }
        if (o.json) {
            print_json(out, {{"statement", format_element(ell)},
                             {"modulus", o.modulus},
                             {"result", "IMPLIED"},
                             {"hypothesis", std::string(to_string(level))},
                             {"witness", witness},
                             {"quotient", element_to_json(r.integral)},
                             {"verified", r.verified}});
        }
        else {
            out << "IMPLIED (" << to_string(level) << ")\n";
            out << "statement: " << format_element(ell) << " = 0 (mod " << o.modulus << ")\n";
            out << "witness: statement - sum of\n" << text;
            out << "equals " << o.modulus << " * (" << format_element(r.integral) << ")\n";
            out << "verified: " << (r.verified ? "yes" : "no") << '\n';
        }
        return exit_ok;
    }
    if (o.json) {
        print_json(out, {{"statement", format_element(ell)},
                         {"modulus", o.modulus},
                         {"result", "NOT_IMPLIED"},
                         {"hypothesis", std::string(to_string(levels.back()))}});
    }
    else {
        out << "NOT_IMPLIED (up to " << to_string(levels.back()) << ")\n";
        out << "statement: " << format_element(ell) << " = 0 (mod " << o.modulus << ")\n";
        out << "the relations alone do not force this; this is not a counterexample\n";
    }
    return exit_failed;
}

Json section_json(const SectionReport &s)
{
    Json diffs = Json::array();
    for (const auto &d : s.diffs) {
        diffs.push_back(to_json(d));
    }
    return {{"section", s.name},
            {"status", s.skipped ? "skipped" : (s.passed() ? "pass" : "fail")},
            {"notes", s.notes},
            {"diffs", diffs}};
}

void print_section(std::ostream &out, const SectionReport &s, bool notes)
{
    out << s.name << ": " << (s.skipped ? "skipped" : (s.passed() ? "pass" : "FAIL")) << '\n';
    if (notes) {
        for (const auto &n : s.notes) {
            out << "  " << n << '\n';
        }
    }
    for (const auto &d : s.diffs) {
        out << "  diff " << d.lhs << " | " << d.term << ": expected " << d.expected << ", got " << d.actual << '\n';
    }
}

int cmd_verify(const Options &o, std::ostream &out)
{
    const auto dir = o.fixtures.empty() ? o.data : o.fixtures;
    const auto report = verify(load_fixtures(dir), o.dim, o.a1_max);
    if (o.json) {
        Json sections = Json::array();
        for (const auto &s : report.sections) {
            sections.push_back(section_json(s));
        }
        print_json(out, {{"dim", o.dim}, {"a1_max", o.a1_max}, {"ok", report.ok()}, {"sections", sections}});
    }
    else {
        for (const auto &s : report.sections) {
            print_section(out, s, true);
        }
        out << (report.ok() ? "all sections pass" : "verification FAILED") << '\n';
    }
    return report.ok() ? exit_ok : exit_failed;
}

int cmd_jtable(const Options &o, std::ostream &out)
{
    const auto table = load_jtable(o);
    if (!o.validate) {
        if (o.json) {
            Json rows = Json::object();
            for (const auto g : all_generators()) {
                rows[format_type(Monomial::power(g))] = element_to_json(table->j_generator(g));
            }
            print_json(out, rows);
        }
        else {
            for (const auto g : all_generators()) {
                out << "J(" << format_type(Monomial::power(g)) << ") = " << format_element(table->j_generator(g)) << '\n';
            }
        }
        return exit_ok;
    }
    const auto report = validate_jtable(*table);
    if (o.json) {
        Json checks = Json::array();
        for (const auto &c : report.checks) {
            checks.push_back({{"check", c.name}, {"passed", c.passed}, {"failures", c.failures}});
        }
        print_json(out, {{"ok", report.ok()}, {"checks", checks}});
    }
    else {
        for (const auto &c : report.checks) {
            out << c.name << ": " << (c.passed ? "pass" : "FAIL") << '\n';
            for (const auto &f : c.failures) {
                out << "  " << f << '\n';
            }
        }
    }
    return report.ok() ? exit_ok : exit_failed;
}

int cmd_report(const Options &o, std::ostream &out)
{
    const auto report = verify(load_fixtures(o.data), 5, o.a1_max);
    bool ok = true;
    Json sections = Json::array();
    for (const auto *name : {"parities", "congruences", "classical"}) {
        const auto *s = report.find(name);
        ok = ok && s->passed();
        if (o.json) {
            sections.push_back(section_json(*s));
            continue;
        }
        out << (name == std::string("parities")    ? "Isolated point parities, dim 5"
                : name == std::string("congruences") ? "Congruences mod 2 from H0 rows, dim 5"
                                                  : "Classical parities, dims 3 and 4")
            << '\n';
        print_section(out, *s, true);
        out << '\n';
    }
    if (o.json) {
        print_json(out, {{"ok", ok}, {"sections", sections}});
    }
    else {
        out << (ok ? "all statements established" : "some statements are not implied by the relations") << '\n';
    }
    return ok ? exit_ok : exit_failed;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Euler characteristics of multisingularity strata of Lagrangian maps", "msing"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    Options o;

    auto *json = app.add_flag("--json", o.json, "JSON output");
    bool text = false;
    auto *text_flag = app.add_flag("--text", text, "Text output (default)");
    json->excludes(text_flag);
    app.add_option("--data", o.data, "Data directory with jtable.txt and the fixtures")->capture_default_str();
    app.add_option("--kernel", o.kernel, "Monomial kernel: auto, scalar, sse2, avx2, neon")->capture_default_str();

    const auto dim_option = [&o](CLI::App *c) {
        c->add_option("--dim", o.dim, "Target dimension")->check(CLI::IsMember({3, 4, 5}))->capture_default_str();
    };
    const auto a1_option = [&o](CLI::App *c) {
        c->add_option("--a1-max", o.a1_max, "Largest A1 exponent")->check(CLI::Range(2, 60))->capture_default_str();
    };

    auto *derive_cmd = app.add_subcommand("derive", "Solve the relation system");
    dim_option(derive_cmd);
    a1_option(derive_cmd);
    derive_cmd->add_flag("--parametric", o.parametric, "Print the shift-stable family rows");

    auto *ca_cmd = app.add_subcommand("ca", "Relations between ca-quantities");
    dim_option(ca_cmd);
    a1_option(ca_cmd);

    auto *collapse_cmd = app.add_subcommand("collapse", "ca relations with signs collapsed");
    dim_option(collapse_cmd);
    a1_option(collapse_cmd);

    auto *cong_cmd = app.add_subcommand("congruences", "Reduced GF(2) basis of the mod 2 congruences");
    dim_option(cong_cmd);
    a1_option(cong_cmd);
    cong_cmd->add_option("--hypothesis", o.hypothesis, "H0, H1 or H2 (default H0)");

    auto *parity_cmd = app.add_subcommand("check-parity", "Decide whether a combination is divisible by d");
    parity_cmd->add_option("--statement", o.statement, "Linear combination of types")->required();
    parity_cmd->add_option("--modulus", o.modulus, "d")->capture_default_str();
    parity_cmd->add_option("--hypothesis", o.hypothesis, "Only use rows valid at this level");
    parity_cmd->add_flag("--collapsed", o.collapsed, "Statement uses collapsed notation");
    dim_option(parity_cmd);
    a1_option(parity_cmd);

    auto *verify_cmd = app.add_subcommand("verify", "Compare the derivation with the fixture files");
    verify_cmd->add_option("--fixtures", o.fixtures, "Fixture directory (default: --data)");
    dim_option(verify_cmd);
    a1_option(verify_cmd);

    auto *jtable_cmd = app.add_subcommand("jtable", "Print or validate the J table");
    jtable_cmd->add_flag("--validate", o.validate, "Run the structural checks");

    auto *report_cmd = app.add_subcommand("report", "One-page summary of the parity results");
    a1_option(report_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (o.kernel != "auto") {
            const auto isa = kernels::parse_isa(o.kernel);
            if (!isa || !kernels::available(*isa)) {
                err << "msing: kernel '" << o.kernel << "' is not available\n";
                return exit_error;
            }
            kernels::select(*isa);
        }
        if (*derive_cmd) {
            return cmd_derive(o, out);
        }
        if (*ca_cmd) {
            return cmd_ca(o, out);
        }
        if (*collapse_cmd) {
            return cmd_collapse(o, out);
        }
        if (*cong_cmd) {
            return cmd_congruences(o, out);
        }
        if (*parity_cmd) {
            return cmd_check_parity(o, out);
        }
        if (*verify_cmd) {
            return cmd_verify(o, out);
        }
        if (*jtable_cmd) {
            return cmd_jtable(o, out);
        }
        return cmd_report(o, out);
    }
    catch (const CLI::Error &e) {
        err << "msing: " << e.what() << '\n' << app.help();
        return exit_error;
    }
    catch (const ParseError &e) {
        err << "msing: parse error: " << e.what() << '\n';
        return exit_error;
    }
    catch (const std::exception &e) {
        err << "msing: " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace msing::cli
