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

#include <msing/dsl.hpp>

#include <msing/error.hpp>

#include "scanner.hpp"

namespace msing {

namespace {

using detail::Scanner;

Rational read_rational(Scanner &s)
{
    const auto start = s.position();
    Integer num(std::to_string(s.read_integer()));
    Integer den(1);
    if (s.consume('/')) {
        den = Integer(std::to_string(s.read_integer()));
        if (den == 0) {
            s.fail_at("zero denominator", start);
        }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

void add_parsed_term(Expression &e, bool symbolic_term, const Rational &c, const Scanner::Type &t)
{
    if (symbolic_term) {
        auto &slot = e.shifted[ShiftKey{t.base, *t.shift}];
        slot += c;
        if (slot == 0) {
            e.shifted.erase(ShiftKey{t.base, *t.shift});
        }
    }
    else {
        e.concrete.add_term(t.base, c);
    }
}

// Parses an expression, stopping at '=' or the end of input.
Expression read_expression(Scanner &s, Notation notation, bool allow_symbolic)
{
    Expression e;
    e.symbolic = allow_symbolic;
    s.skip_spaces();
    Rational sign = 1;
    if (s.consume('-')) {
        sign = -1;
    }
    else {
        s.consume('+');
    }
    bool first = true;
    while (true) {
        s.skip_spaces();
        const auto term_start = s.position();
        Rational coeff = 1;
        Scanner::Type type;
        if (s.peek() >= '0' && s.peek() <= '9' && !s.at_end()) {
            if (s.at_unit()) {
                type = s.read_type(notation, allow_symbolic);
            }
            else {
                coeff = read_rational(s);
                s.skip_spaces();
                if (s.consume('*')) {
                    s.skip_spaces();
                    type = s.read_type(notation, allow_symbolic);
                }
            }
        }
        else if (s.at_factor()) {
            type = s.read_type(notation, allow_symbolic);
        }
        else {
            s.fail(first ? "expected a term" : "expected a term after operator");
        }
        const bool symbolic_term = type.shift.has_value();
        if (allow_symbolic && !symbolic_term) {
            s.fail_at("every term of a family row needs a symbolic A1 exponent", term_start);
        }
        add_parsed_term(e, symbolic_term, sign * coeff, type);
        first = false;

        s.skip_spaces();
        if (s.consume('+')) {
            sign = 1;
        }
        else if (s.consume('-')) {
            sign = -1;
        }
        else {
            break;
        }
    }
    return e;
}

std::string term_text(const Rational &magnitude, const std::string &type_text, bool is_unit)
{
    if (is_unit) {
        return to_string(magnitude);
    }
    if (magnitude == 1) {
        return type_text;
    }
    return to_string(magnitude) + "*" + type_text;
}

void append_signed(std::string &out, const Rational &c, const std::string &body)
{
    if (out.empty()) {
        out = c < 0 ? "-" + body : body;
    }
    else {
        out += c < 0 ? " - " : " + ";
        out += body;
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        const auto start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

int directive_int(std::string_view word, std::size_t line)
{
    Scanner s(word, line);
    const auto v = s.read_integer();
    if (!s.at_end() || v > 1'000'000) {
        s.fail("expected a non-negative integer");
    }
    return static_cast<int>(v);
}

void apply_directive(std::string_view text, std::size_t line, Directives &d)
{
    const auto w = words(text.substr(1));
    if (w.empty()) {
        throw ParseError("empty directive", line, 1);
    }
    const auto name = w[0];
    const auto need = [&](std::size_t n) {
        if (w.size() != n + 1) {
            throw ParseError("directive @" + std::string(name) + " expects " + std::to_string(n) + " argument(s)",
                             line, 1);
        }
    };
    const auto hypothesis = [&](std::string_view word) {
        const auto h = parse_hypothesis(word);
        if (!h) {
            throw ParseError("unknown hypothesis '" + std::string(word) + "' (expected H0, H1 or H2)", line, 1);
        }
        return *h;
    };
    if (name == "dim") {
        need(1);
        d.dim = directive_int(w[1], line);
    }
    else if (name == "requires") {
        need(1);
        d.requires_level = hypothesis(w[1]);
        d.requires_at_zero.reset();
    }
    else if (name == "requires-k0") {
        need(1);
        d.requires_at_zero = hypothesis(w[1]);
    }
    else if (name == "family") {
        need(1);
        if (w[1] != "k") {
            throw ParseError("only '@family k' is supported", line, 1);
        }
        d.family = true;
    }
    else if (name == "concrete") {
        need(0);
        d.family = false;
    }
    else if (name == "modulus") {
        need(1);
        d.modulus = directive_int(w[1], line);
        if (*d.modulus < 1) {
            throw ParseError("modulus must be positive", line, 1);
        }
    }
    else if (name == "a1-max") {
        need(1);
        d.a1_max = directive_int(w[1], line);
    }
    else if (name == "collapsed") {
        need(0);
        d.notation = Notation::collapsed;
    }
    else if (name == "signed") {
        need(0);
        d.notation = Notation::signed_types;
    }
    else if (name == "source") {
        need(1);
        d.source = std::string(w[1]);
    }
    else if (name == "group") {
        if (w.size() < 2) {
            throw ParseError("@group needs a label", line, 1);
        }
        const auto rest = trim(text.substr(text.find(name) + name.size()));
        d.group = std::string(rest);
        ++d.group_id;
    }
    else {
        throw ParseError("unknown directive @" + std::string(name), line, 1);
    }
}

} // namespace

Expression parse_expression(std::string_view text, Notation notation, bool allow_symbolic)
{
    Scanner s(text);
    auto e = read_expression(s, notation, allow_symbolic);
    s.skip_spaces();
    if (!s.at_end()) {
        s.fail("unexpected trailing input");
    }
    return e;
}

AlgebraElement parse_element(std::string_view text, Notation notation)
{
    return parse_expression(text, notation, false).concrete;
}

std::string format_element(const AlgebraElement &e, Notation notation)
{
    std::string out;
    for (const auto &[m, c] : e) {
        append_signed(out, c, term_text(abs(c), format_type(m, notation), m.is_unit()));
    }
    return out.empty() ? "0" : out;
}

std::string format_shifted_type(const Monomial &base, int shift)
{
    const std::string a1 = shift == 0 ? "A1^{k}" : "A1^{k-" + std::to_string(shift) + "}";
    return base.is_unit() ? a1 : format_type(base) + " " + a1;
}

std::string format_shift_terms(const ShiftTerms &terms, Notation)
{
    std::string out;
    for (const auto &[key, c] : terms) {
        append_signed(out, c, term_text(abs(c), format_shifted_type(key.base, key.shift), false));
    }
    return out.empty() ? "0" : out;
}

DslDocument parse_document(std::string_view text)
{
    DslDocument doc;
    Directives directives;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        // Keep columns relative to the original line: only trim the right.
        while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r')) {
            raw.remove_suffix(1);
        }
        if (trim(raw).empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        if (trim(raw).front() == '@') {
            apply_directive(trim(raw), line_no, directives);
            continue;
        }

        DslLine line;
        line.line = line_no;
        line.context = directives;
        Scanner s(raw, line_no);
        s.skip_spaces();
        if (s.peek() == 'J' && s.peek(1) == '(') {
            s.advance(2);
            s.skip_spaces();
            const auto f = s.read_factor(Notation::signed_types, false);
            if (f.exponent != 1) {
                s.fail("J(...) takes a single generator");
            }
            s.skip_spaces();
            s.expect(')');
            line.j_of = f.generator;
            s.skip_spaces();
            s.expect('=');
            line.rhs = read_expression(s, Notation::signed_types, false);
        }
        else {
            const bool symbolic = directives.family;
            auto first = read_expression(s, directives.notation, symbolic);
            s.skip_spaces();
            if (s.consume('=')) {
                line.has_lhs = true;
                line.lhs = std::move(first);
                line.rhs = read_expression(s, directives.notation, symbolic);
            }
            else {
                line.rhs = std::move(first);
            }
        }
        s.skip_spaces();
        if (!s.at_end()) {
            s.fail("unexpected trailing input");
        }
        doc.lines.push_back(std::move(line));
        if (end == text.size()) {
            break;
        }
    }
    return doc;
}

} // namespace msing
