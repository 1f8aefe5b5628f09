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

#include <msing/lattice.hpp>

#include <stdexcept>
#include <utility>

namespace msing::lattice {

bool RowEchelon::is_pivot(std::size_t column) const noexcept
{
    for (auto p : pivots) {
        if (p == column) {
            return true;
        }
    }
    return false;
}

RowEchelon row_echelon(const std::vector<RationalVector> &input, std::size_t columns)
{
    const std::size_t m = input.size();
    std::vector<RationalVector> a = input;
    std::vector<RationalVector> t(m, RationalVector(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != columns) {
            throw std::invalid_argument("row_echelon: ragged input");
        }
        t[i][i] = 1;
    }

    RowEchelon out;
    out.columns = columns;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) {
            ++p;
        }
        if (p == m) {
            continue;
        }
        std::swap(a[p], a[r]);
        std::swap(t[p], t[r]);
        const Rational inv = 1 / a[r][c];
        for (auto &x : a[r]) {
            x *= inv;
        }
        for (auto &x : t[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) {
                continue;
            }
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < columns; ++j) {
                a[i][j] -= f * a[r][j];
            }
            for (std::size_t j = 0; j < m; ++j) {
                t[i][j] -= f * t[r][j];
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    t.resize(r);
    out.rows = std::move(a);
    out.transform = std::move(t);
    return out;
}

Hermite hermite(const std::vector<IntegerVector> &generators, std::size_t columns)
{
    const std::size_t m = generators.size();
    std::vector<IntegerVector> a = generators;
    std::vector<IntegerVector> u(m, IntegerVector(m, Integer(0)));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != columns) {
            throw std::invalid_argument("hermite: ragged input");
        }
        u[i][i] = 1;
    }
    const auto combine = [&](std::size_t i, std::size_t j, const Integer &f) {
        // row i -= f * row j
        for (std::size_t c = 0; c < columns; ++c) {
            a[i][c] -= f * a[j][c];
        }
        for (std::size_t c = 0; c < m; ++c) {
            u[i][c] -= f * u[j][c];
        }
    };

    Hermite out;
    out.columns = columns;
    out.generator_count = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < m; ++c) {
        // Euclid on column c among rows r..m-1.
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (a[i][c] != 0 && (best == m || abs(a[i][c]) < abs(a[best][c]))) {
                    best = i;
                }
            }
            if (best == m) {
                break;
            }
            std::swap(a[best], a[r]);
            std::swap(u[best], u[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a[i][c] != 0) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                    combine(i, r, q);
                    done = done && a[i][c] == 0;
                }
            }
            if (done) {
                break;
            }
        }
        if (a[r][c] == 0) {
            continue;
        }
        if (a[r][c] < 0) {
            for (auto &x : a[r]) {
                x = -x;
            }
            for (auto &x : u[r]) {
                x = -x;
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            if (q != 0) {
                combine(i, r, q);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    u.resize(r);
    out.basis = std::move(a);
    out.transform = std::move(u);
    return out;
}

std::optional<IntegerVector> lattice_coordinates(const Hermite &h, const IntegerVector &target)
{
    if (target.size() != h.columns) {
        throw std::invalid_argument("lattice_coordinates: dimension mismatch");
    }
    IntegerVector rest = target;
    IntegerVector coeffs(h.generator_count, Integer(0));
    for (std::size_t i = 0; i < h.basis.size(); ++i) {
        const auto c = h.pivots[i];
        // Columns left of the pivot are already cleared.
        if (rest[c] == 0) {
            continue;
        }
        if (!mpz_divisible_p(rest[c].get_mpz_t(), h.basis[i][c].get_mpz_t())) {
            return std::nullopt;
        }
        const Integer q = rest[c] / h.basis[i][c];
        for (std::size_t j = 0; j < h.columns; ++j) {
            rest[j] -= q * h.basis[i][j];
        }
        for (std::size_t j = 0; j < h.generator_count; ++j) {
            coeffs[j] += q * h.transform[i][j];
        }
    }
    for (const auto &x : rest) {
        if (x != 0) {
            return std::nullopt;
        }
    }
    return coeffs;
}

} // namespace msing::lattice
