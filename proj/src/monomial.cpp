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

#include <msing/monomial.hpp>

#include <algorithm>
#include <cstring>
#include <functional>
#include <stdexcept>

#include "scanner.hpp"

namespace msing {

ParseError::ParseError(const std::string &what, std::size_t line, std::size_t column)
    : Error(line == 0 ? "column " + std::to_string(column) + ": " + what
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

Monomial::Monomial(const Exponents &exps) : exps_(exps)
{
    for (auto e : exps_) {
        if (e > max_exponent) {
            throw std::out_of_range("exponent exceeds the representable range");
        }
    }
}

Monomial Monomial::power(Generator g, int e)
{
    if (e < 0 || e > max_exponent) {
        throw std::out_of_range("exponent out of range: " + std::to_string(e));
    }
    Monomial m;
    m.exps_[index(g)] = static_cast<std::uint8_t>(e);
    return m;
}

int Monomial::codim() const noexcept
{
    const auto &w = codim_weights();
    int c = 0;
    for (std::size_t i = 0; i < generator_count; ++i) {
        c += int(w[i]) * int(exps_[i]);
    }
    return c;
}

bool Monomial::is_unit() const noexcept
{
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::with_a1(int k) const
{
    if (k < 0 || k > max_exponent) {
        throw std::out_of_range("A1 exponent out of range: " + std::to_string(k));
    }
    Monomial m = *this;
    m.exps_[0] = static_cast<std::uint8_t>(k);
    return m;
}

int Monomial::total_degree() const noexcept
{
    int d = 0;
    for (auto e : exps_) {
        d += e;
    }
    return d;
}

bool Monomial::divides(const Monomial &other) const noexcept
{
    for (std::size_t i = 0; i < generator_count; ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient(const Monomial &divisor) const
{
    if (!divisor.divides(*this)) {
        throw std::invalid_argument("quotient: not a divisor");
    }
    Monomial m;
    for (std::size_t i = 0; i < generator_count; ++i) {
        m.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
    }
    return m;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial m;
    for (std::size_t i = 0; i < generator_count; ++i) {
        const int e = int(a.exps_[i]) + int(b.exps_[i]);
        if (e > Monomial::max_exponent) {
            throw std::overflow_error("monomial exponent overflow");
        }
        m.exps_[i] = static_cast<std::uint8_t>(e);
    }
    return m;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) noexcept
{
    if (auto c = a.codim() <=> b.codim(); c != 0) {
        return c;
    }
    if (auto c = a.a1_degree() <=> b.a1_degree(); c != 0) {
        return c;
    }
    return a.exps_ <=> b.exps_;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept
{
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::memcpy(&lo, m.data(), 8);
    std::memcpy(&hi, m.data() + 8, 8);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ull + (lo << 6) + (lo >> 2)));
}

namespace detail {

long long Scanner::read_integer()
{
    const auto start = pos_;
    long long v = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
        if (v > 1'000'000'000'000LL) {
            fail_at("integer too large", start);
        }
        v = v * 10 + (peek() - '0');
        ++pos_;
    }
    if (pos_ == start) {
        fail("expected an integer");
    }
    return v;
}

bool Scanner::at_unit() const noexcept
{
    if (peek() != '1') {
        return false;
    }
    const char next = peek(1);
    return !(next >= '0' && next <= '9') && next != '/' && next != '*' && next != '^';
}

Scanner::Factor Scanner::read_factor(Notation notation, bool allow_symbolic)
{
    const auto start = pos_;
    const char letter = peek();
    if (letter != 'A' && letter != 'D' && letter != 'E') {
        fail("expected a generator (A, D or E)");
    }
    advance();
    if (!(peek() >= '0' && peek() <= '9') || at_end()) {
        fail("expected a digit after the generator family");
    }
    const int mu = peek() - '0';
    advance();
    if (peek() >= '0' && peek() <= '9' && !at_end()) {
        fail_at("unknown generator", start);
    }
    const auto family = static_cast<Family>(letter);
    const std::string token = std::string(1, letter) + std::to_string(mu);

    Sign sign = Sign::none;
    if (is_signed_pair(family, mu)) {
        const auto probe = find_generator(family, mu, Sign::plus);
        const bool drops_sign = notation == Notation::collapsed && is_collapsible(*probe);
        if (drops_sign) {
            sign = Sign::plus;
            if ((peek() == '+' || peek() == '-') && pos_ + 1 < text_.size() && text_[pos_ + 1] != ' ') {
                // "A3+X" is not meaningful in collapsed notation; "A3 + X" is.
                if (text_[pos_ + 1] == '^') {
                    fail_at("collapsed notation writes " + token + " without a sign", start);
                }
            }
        }
        else if (consume('+')) {
            sign = Sign::plus;
        }
        else if (consume('-')) {
            sign = Sign::minus;
        }
        else {
            fail_at("generator " + token + " requires a sign (+ or -)", start);
        }
    }
    const auto gen = find_generator(family, mu, sign);
    if (!gen) {
        fail_at("unknown generator " + token, start);
    }

    Factor f{*gen, 1, std::nullopt};
    if (consume('^')) {
        if (consume('{')) {
            if (!allow_symbolic) {
                fail("symbolic exponent not allowed here");
            }
            if (*gen != Generator::A1) {
                fail_at("symbolic exponents are only allowed on A1", start);
            }
            if (!consume('k')) {
                fail("expected 'k' in symbolic exponent");
            }
            int shift = 0;
            if (consume('-')) {
                const auto s = read_integer();
                if (s > Monomial::max_exponent) {
                    fail("shift too large");
                }
                shift = static_cast<int>(s);
            }
            expect('}');
            f.shift = shift;
            f.exponent = 0;
        }
        else {
            if (!(peek() >= '0' && peek() <= '9') || at_end()) {
                fail("malformed exponent (expected a positive integer)");
            }
            const auto e = read_integer();
            if (e < 1) {
                fail("malformed exponent (expected a positive integer)");
            }
            if (e > Monomial::max_exponent) {
                fail("exponent too large");
            }
            f.exponent = static_cast<int>(e);
        }
    }
    return f;
}

Scanner::Type Scanner::read_type(Notation notation, bool allow_symbolic)
{
    Type t;
    if (at_unit()) {
        advance();
        return t;
    }
    if (!at_factor()) {
        fail("expected a type");
    }
    Monomial::Exponents exps{};
    while (true) {
        const auto start = pos_;
        const auto f = read_factor(notation, allow_symbolic);
        if (f.shift) {
            if (t.shift) {
                fail_at("symbolic A1 exponent given twice", start);
            }
            if (exps[0] != 0) {
                fail_at("A1 cannot carry both a symbolic and a numeric exponent", start);
            }
            t.shift = f.shift;
        }
        else {
            if (f.generator == Generator::A1 && t.shift) {
                fail_at("A1 cannot carry both a symbolic and a numeric exponent", start);
            }
            const int e = exps[index(f.generator)] + f.exponent;
            if (e > Monomial::max_exponent) {
                fail_at("exponent too large", start);
            }
            exps[index(f.generator)] = static_cast<std::uint8_t>(e);
        }
        // A following factor must be separated by whitespace.
        const auto save = pos_;
        skip_spaces();
        if (pos_ > save && at_factor()) {
            continue;
        }
        pos_ = save;
        break;
    }
    t.base = Monomial(exps);
    return t;
}

} // namespace detail

Monomial parse_type(std::string_view text, Notation notation)
{
    detail::Scanner s(text);
    s.skip_spaces();
    const auto t = s.read_type(notation, false);
    s.skip_spaces();
    if (!s.at_end()) {
        s.fail("unexpected trailing input");
    }
    return t.base;
}

std::string format_type(const Monomial &m, Notation notation)
{
    if (m.is_unit()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = generator_count; i-- > 0;) {
        const auto g = generator_at(i);
        const int e = m.exponent(g);
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        const auto &gi = info(g);
        if (notation == Notation::collapsed && is_collapsible(g)) {
            if (gi.sign == Sign::minus) {
                throw std::invalid_argument("format_type: monomial is not a collapsed representative");
            }
            out += static_cast<char>(gi.family);
            out += std::to_string(gi.mu);
        }
        else {
            out += gi.name;
        }
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

std::vector<Monomial> enumerate_types(int max_codim, int max_a1)
{
    if (max_codim < 0 || max_codim > 5) {
        throw std::invalid_argument("enumerate_types: max_codim must lie in 0..5");
    }
    if (max_a1 < 0 || max_a1 > Monomial::max_exponent) {
        throw std::invalid_argument("enumerate_types: max_a1 out of range");
    }
    std::vector<Monomial> a1_free;
    Monomial::Exponents exps{};
    // Depth-first over generators 1..15 (A1 is codim 0 and handled below).
    std::function<void(std::size_t, int)> walk = [&](std::size_t gi, int budget) {
        if (gi == generator_count) {
            a1_free.emplace_back(exps);
            return;
        }
        const int c = codim_weights()[gi];
        for (int e = 0; e * c <= budget; ++e) {
            exps[gi] = static_cast<std::uint8_t>(e);
            walk(gi + 1, budget - e * c);
        }
        exps[gi] = 0;
    };
    walk(1, max_codim);

    std::vector<Monomial> out;
    out.reserve(a1_free.size() * std::size_t(max_a1 + 1));
    for (const auto &m : a1_free) {
        for (int k = 0; k <= max_a1; ++k) {
            out.push_back(m.with_a1(k));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Monomial collapse(const Monomial &m)
{
    Monomial::Exponents exps{};
    for (auto g : all_generators()) {
        exps[index(collapse_representative(g))] += static_cast<std::uint8_t>(m.exponent(g));
    }
    return Monomial(exps);
}

std::vector<Monomial> collapse_fiber(const Monomial &representative)
{
    if (!(collapse(representative) == representative)) {
        throw std::invalid_argument("collapse_fiber: not a collapsed representative");
    }
    std::vector<Monomial> out{representative};
    for (auto g : all_generators()) {
        if (!is_collapsible(g) || info(g).sign != Sign::plus) {
            continue;
        }
        const int total = representative.exponent(g);
        const auto minus = flip_sign(g);
        std::vector<Monomial> next;
        for (const auto &m : out) {
            auto exps = m.exponents();
            for (int plus_part = 0; plus_part <= total; ++plus_part) {
                exps[index(g)] = static_cast<std::uint8_t>(plus_part);
                exps[index(minus)] = static_cast<std::uint8_t>(total - plus_part);
                next.emplace_back(exps);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace msing
