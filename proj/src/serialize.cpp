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

#include <msing/serialize.hpp>

#include <msing/dsl.hpp>
#include <msing/error.hpp>

namespace msing {

namespace {

Notation notation_from(const Json &j)
{
    const auto n = j.value("notation", std::string("signed"));
    if (n == "signed") {
        return Notation::signed_types;
    }
    if (n == "collapsed") {
        return Notation::collapsed;
    }
    throw Error("unknown notation '" + n + "'");
}

Hypothesis hypothesis_from(const Json &j, const char *key)
{
    const auto text = j.at(key).get<std::string>();
    const auto h = parse_hypothesis(text);
    if (!h) {
        throw Error("bad hypothesis '" + text + "'");
    }
    return *h;
}

} // namespace

Json element_to_json(const AlgebraElement &e, Notation notation)
{
    auto out = Json::array();
    for (const auto &[m, c] : e) {
        out.push_back({{"type", format_type(m, notation)}, {"coeff", to_string(c)}});
    }
    return out;
}

AlgebraElement element_from_json(const Json &j, Notation notation)
{
    AlgebraElement e;
    for (const auto &t : j) {
        e.add_term(parse_type(t.at("type").get<std::string>(), notation),
                   parse_rational(t.at("coeff").get<std::string>()));
    }
    return e;
}

Json to_json(const SolvedFormula &f)
{
    return {{"lhs", format_type(f.lhs)},
            {"hypothesis", std::string(to_string(f.hypothesis))},
            {"rhs", element_to_json(f.rhs)}};
}

Json to_json(const ParametricFormula &f)
{
    auto terms = Json::array();
    for (const auto &[key, c] : f.terms) {
        terms.push_back({{"type", format_type(key.base)}, {"shift", key.shift}, {"coeff", to_string(c)}});
    }
    return {{"lhs", format_type(f.base)},
            {"hypothesis", std::string(to_string(f.hypothesis))},
            {"hypothesis_k0", std::string(to_string(f.hypothesis_at_zero))},
            {"terms", terms}};
}

Json to_json(const CaFormula &f)
{
    return {{"lhs", format_type(f.lhs, f.notation)},
            {"hypothesis", std::string(to_string(f.hypothesis))},
            {"notation", f.notation == Notation::collapsed ? "collapsed" : "signed"},
            {"rhs", element_to_json(f.rhs, f.notation)}};
}

Json to_json(const DiffEntry &d)
{
    return {{"section", d.section}, {"lhs", d.lhs}, {"term", d.term}, {"expected", d.expected}, {"actual", d.actual}};
}

ParametricFormula parametric_from_json(const Json &j)
{
    ParametricFormula f;
    f.base = parse_type(j.at("lhs").get<std::string>());
    f.hypothesis = hypothesis_from(j, "hypothesis");
    f.hypothesis_at_zero = hypothesis_from(j, "hypothesis_k0");
    for (const auto &t : j.at("terms")) {
        const ShiftKey key{parse_type(t.at("type").get<std::string>()), t.at("shift").get<int>()};
        f.terms[key] += parse_rational(t.at("coeff").get<std::string>());
    }
    return f;
}

CaFormula ca_from_json(const Json &j)
{
    CaFormula f;
    f.notation = notation_from(j);
    f.lhs = parse_type(j.at("lhs").get<std::string>(), f.notation);
    f.hypothesis = hypothesis_from(j, "hypothesis");
    f.rhs = element_from_json(j.at("rhs"), f.notation);
    return f;
}

std::string to_dsl(const SolvedFormula &f)
{
    return format_type(f.lhs) + " = " + format_element(f.rhs);
}

std::string to_dsl(const ParametricFormula &f)
{
    return format_shifted_type(f.base, 0) + " = " + format_shift_terms(f.terms);
}

std::string to_dsl(const CaFormula &f)
{
    return format_type(f.lhs, f.notation) + " = " + format_element(f.rhs, f.notation);
}

} // namespace msing
