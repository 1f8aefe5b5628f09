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

#include <msing/jtable.hpp>

#include <fstream>
#include <mutex>
#include <sstream>

#include <msing/dsl.hpp>
#include <msing/error.hpp>

namespace msing {

JTable JTable::parse(std::string_view text)
{
    JTable t;
    for (const auto &line : parse_document(text).lines) {
        if (!line.j_of) {
            throw ParseError("expected 'J(<generator>) = ...'", line.line, 1);
        }
        if (t.has(*line.j_of)) {
            throw ParseError("J(" + std::string(info(*line.j_of).name) + ") listed twice", line.line, 1);
        }
        t.set(*line.j_of, line.rhs.concrete);
    }
    return t;
}

JTable JTable::load(const std::filesystem::path &file)
{
    std::ifstream in(file);
    if (!in) {
        throw Error("cannot open " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse(buf.str());
    }
    catch (const ParseError &e) {
        throw ParseError(file.string() + ": " + e.what(), e.line(), e.column());
    }
}

void JTable::set(Generator g, AlgebraElement image)
{
    entries_[index(g)] = std::move(image);
}

std::size_t JTable::size() const noexcept
{
    std::size_t n = 0;
    for (const auto &e : entries_) {
        n += e.has_value() ? 1 : 0;
    }
    return n;
}

const AlgebraElement &JTable::j_generator(Generator g) const
{
    const auto &e = entries_[index(g)];
    if (!e) {
        throw Error("J table has no entry for " + std::string(info(g).name));
    }
    return *e;
}

std::filesystem::path default_data_dir()
{
    return MSING_DATA_DIR;
}

JEvaluator::JEvaluator(std::shared_ptr<const JTable> table) : table_(std::move(table))
{
    if (!table_) {
        throw std::invalid_argument("JEvaluator needs a table");
    }
}

std::shared_ptr<const AlgebraElement> JEvaluator::lookup(const Monomial &x, const TruncationBounds &bounds) const
{
    std::shared_lock lock(mutex_);
    const auto it = cache_.find(x);
    if (it == cache_.end()) {
        return nullptr;
    }
    for (const auto &[b, value] : it->second) {
        if (b == bounds) {
            return value;
        }
    }
    for (const auto &[b, value] : it->second) {
        if (b.dominates(bounds)) {
            return std::make_shared<const AlgebraElement>(value->truncated(bounds));
        }
    }
    return nullptr;
}

std::shared_ptr<const AlgebraElement> JEvaluator::dominating(const Monomial &x, const TruncationBounds &bounds) const
{
    std::shared_lock lock(mutex_);
    const auto it = cache_.find(x);
    if (it == cache_.end()) {
        return nullptr;
    }
    for (const auto &[b, value] : it->second) {
        if (b.dominates(bounds)) {
            return value;
        }
    }
    return nullptr;
}

std::shared_ptr<const AlgebraElement> JEvaluator::compute(const Monomial &x, const TruncationBounds &bounds) const
{
    if (auto hit = lookup(x, bounds)) {
        return hit;
    }
    std::shared_ptr<const AlgebraElement> result;
    if (x.is_unit()) {
        result = std::make_shared<const AlgebraElement>(AlgebraElement::one().truncated(bounds));
    }
    else {
        // Peel off the largest generator; the cofactor is cached in turn.
        std::size_t top = generator_count - 1;
        while (x.exponent(generator_at(top)) == 0) {
            --top;
        }
        const auto g = generator_at(top);
        const auto rest = compute(x.quotient(Monomial::power(g)), bounds);
        result = std::make_shared<const AlgebraElement>(mul(*rest, table_->j_generator(g), bounds));
    }
    std::unique_lock lock(mutex_);
    auto &slot = cache_[x];
    for (const auto &[b, value] : slot) {
        if (b == bounds) {
            return value;
        }
    }
    slot.emplace_back(bounds, result);
    return result;
}

AlgebraElement JEvaluator::j_monomial(const Monomial &x, const TruncationBounds &bounds) const
{
    if (x.codim() > 5) {
        throw UnclassifiedTypeError("J is only defined up to codimension 5, got " + format_type(x));
    }
    return *compute(x, bounds);
}

Integer JEvaluator::adjacency_index(const Monomial &a, const Monomial &x) const
{
    if (a == x) {
        return 1;
    }
    if (a.codim() > x.codim() || a.a1_degree() < x.a1_degree()) {
        return 0;
    }
    // Only terms up to A's grading matter.
    if (x.codim() > 5) {
        throw UnclassifiedTypeError("J is only defined up to codimension 5, got " + format_type(x));
    }
    const auto bounds = TruncationBounds{a.codim(), a.a1_degree()};
    auto image = dominating(x, bounds);
    if (!image) {
        image = compute(x, bounds);
    }
    const auto c = image->coefficient(a);
    if (!is_integer(c)) {
        throw ConsistencyError("non-integer adjacency coefficient of " + format_type(a) + " in J(" + format_type(x) +
                               ")");
    }
    return a.codim() % 2 == 0 ? Integer(c.get_num()) : Integer(-c.get_num());
}

std::size_t JEvaluator::cache_size() const
{
    std::shared_lock lock(mutex_);
    std::size_t n = 0;
    for (const auto &[m, entries] : cache_) {
        n += entries.size();
    }
    return n;
}

bool JTableReport::ok() const noexcept
{
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

namespace {

void fail(JTableCheck &check, std::string message)
{
    check.passed = false;
    check.failures.push_back(std::move(message));
}

std::string entry_name(Generator g)
{
    return "J(" + std::string(info(g).name) + ")";
}

} // namespace

JTableReport validate_jtable(const JTable &table)
{
    JTableReport report;

    JTableCheck entries{"entries", true, {}};
    for (auto g : all_generators()) {
        if (!table.has(g)) {
            fail(entries, entry_name(g) + " missing");
        }
    }
    report.checks.push_back(entries);

    JTableCheck unit{"J(1) = 1", true, {}};
    JTableCheck a1{"J(A1) = A1", true, {}};
    JTableCheck codim_mono{"codim monotonicity", true, {}};
    JTableCheck a1_mono{"A1 monotonicity", true, {}};
    JTableCheck diagonal{"diagonal sign", true, {}};
    JTableCheck integral{"integer coefficients", true, {}};

    const auto shared = std::make_shared<const JTable>(table);
    const JEvaluator eval(shared);
    if (!(eval.j_monomial(Monomial::unit()) == AlgebraElement::one())) {
        fail(unit, "J(1) != 1");
    }
    const auto a1_gen = Monomial::power(Generator::A1);
    if (table.has(Generator::A1) && !(table.j_generator(Generator::A1) == AlgebraElement::term(a1_gen))) {
        fail(a1, "J(A1) = " + format_element(table.j_generator(Generator::A1)));
    }

    for (auto g : all_generators()) {
        if (!table.has(g)) {
            continue;
        }
        const auto &image = table.j_generator(g);
        const auto gm = Monomial::power(g);
        for (const auto &[m, c] : image) {
            if (m.codim() > codim(g)) {
                fail(codim_mono, entry_name(g) + " contains " + format_type(m) + " of higher codimension");
            }
            if (!is_integer(c)) {
                fail(integral, entry_name(g) + " has coefficient " + to_string(c) + " on " + format_type(m));
            }
            if (m.codim() == codim(g) && !(m == gm)) {
                fail(codim_mono, entry_name(g) + " contains " + format_type(m) + " of equal codimension");
            }
        }
        const Rational expected = codim(g) % 2 == 0 ? 1 : -1;
        const auto actual = image.coefficient(gm);
        if (actual != expected) {
            fail(diagonal, entry_name(g) + " has coefficient " + to_string(actual) + " on " + std::string(info(g).name) +
                               ", expected " + to_string(expected));
        }
    }

    // A1-monotonicity follows from J(A1) = A1; check it on the products
    // the relation engine actually uses.
    if (entries.passed) {
        for (const auto &x : enumerate_types(5, 2)) {
            for (const auto &[m, c] : eval.j_monomial(x)) {
                if (m.a1_degree() < x.a1_degree()) {
                    fail(a1_mono, "J(" + format_type(x) + ") contains " + format_type(m));
                    break;
                }
            }
        }
    }
    else {
        fail(a1_mono, "skipped: table incomplete");
    }

    for (auto &c : {unit, a1, codim_mono, a1_mono, diagonal, integral}) {
        report.checks.push_back(c);
    }
    return report;
}

} // namespace msing
