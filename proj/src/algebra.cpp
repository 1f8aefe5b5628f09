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

#include <msing/algebra.hpp>

#include <stdexcept>
#include <vector>

#include <msing/kernels.hpp>

namespace msing {

std::string to_string(const Rational &q)
{
    return q.get_str();
}

std::string to_string(const Integer &z)
{
    return z.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::size_t i = 0;
    const auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
            ++j;
        }
        return j;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    auto j = digits(i);
    if (j == i) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (j < text.size()) {
        if (text[j] != '/') {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        const auto k = digits(j + 1);
        if (k == j + 1 || k != text.size()) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
    }
    Rational q;
    if (q.set_str(std::string(text[0] == '+' ? text.substr(1) : text), 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

TruncationBounds TruncationBounds::make(int max_codim, int max_a1)
{
    if (max_codim < 0 || max_codim > 5) {
        throw std::invalid_argument("max_codim must lie in 0..5");
    }
    if (max_a1 < 0 || max_a1 > Monomial::max_exponent) {
        throw std::invalid_argument("max_a1 out of range");
    }
    return TruncationBounds{max_codim, max_a1};
}

AlgebraElement AlgebraElement::term(const Monomial &m, const Rational &c)
{
    AlgebraElement e;
    e.add_term(m, c);
    return e;
}

Rational AlgebraElement::coefficient(const Monomial &m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Monomial &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

AlgebraElement AlgebraElement::truncated(const TruncationBounds &bounds) const
{
    AlgebraElement out;
    for (const auto &[m, c] : terms_) {
        if (bounds.admits(m)) {
            out.terms_.emplace_hint(out.terms_.end(), m, c);
        }
    }
    return out;
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &other)
{
    if (&other == this) {
        return *this *= Rational(2);
    }
    for (const auto &[m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &other)
{
    if (&other == this) {
        terms_.clear();
        return *this;
    }
    for (const auto &[m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

AlgebraElement add(const AlgebraElement &a, const AlgebraElement &b)
{
    return a + b;
}

AlgebraElement mul(const AlgebraElement &a, const AlgebraElement &b, const TruncationBounds &bounds)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const auto &kernel = kernels::active();
    std::vector<Monomial> rhs;
    std::vector<const Rational *> rhs_coeffs;
    rhs.reserve(b.size());
    rhs_coeffs.reserve(b.size());
    for (const auto &[m, c] : b) {
        rhs.push_back(m);
        rhs_coeffs.push_back(&c);
    }
    std::vector<Monomial> products(rhs.size());
    std::vector<std::uint8_t> keep(rhs.size());

    AlgebraElement out;
    Rational prod;
    for (const auto &[m, c] : a) {
        const bool overflow = kernel.multiply_batch(m.data(), rhs.front().data(), rhs.size(), bounds.max_codim,
                                                    bounds.max_a1, reinterpret_cast<std::uint8_t *>(products.data()),
                                                    keep.data());
        if (overflow) {
            throw std::overflow_error("monomial exponent overflow in product");
        }
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            if (keep[i] != 0) {
                prod = c * *rhs_coeffs[i];
                out.add_term(products[i], prod);
            }
        }
    }
    return out;
}

AlgebraElement geometric_partial_sum(const AlgebraElement &x, const TruncationBounds &bounds)
{
    if (!bounds.is_bounded()) {
        throw std::invalid_argument("geometric_partial_sum needs finite bounds");
    }
    if (x.has_unit_term()) {
        throw std::invalid_argument("geometric_partial_sum: series does not terminate (unit term present)");
    }
    // Every power raises codim or A1-degree by at least one, so at most
    // max_codim + max_a1 + 1 nonzero powers survive.
    const auto base = x.truncated(bounds);
    AlgebraElement sum = AlgebraElement::one();
    AlgebraElement power = AlgebraElement::one();
    while (true) {
        power = mul(power, base, bounds);
        if (power.is_zero()) {
            break;
        }
        sum += power;
    }
    return sum;
}

} // namespace msing
