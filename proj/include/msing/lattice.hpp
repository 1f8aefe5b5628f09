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


#ifndef MSING_LATTICE_HPP
#define MSING_LATTICE_HPP

// Exact linear algebra over Q and Z used by the parity oracle.

#include <cstddef>
#include <optional>
#include <vector>

#include <msing/rational.hpp>

namespace msing::lattice {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// Reduced row echelon form of a rational matrix with the transform that
// produces it: rows[i] = sum_j transform[i][j] * input[j].
struct RowEchelon {
    std::size_t columns = 0;
    std::vector<RationalVector> rows;
    std::vector<std::size_t> pivots;
    std::vector<RationalVector> transform;

    std::size_t rank() const noexcept
    {
        return rows.size();
    }
    bool is_pivot(std::size_t column) const noexcept;
};

RowEchelon row_echelon(const std::vector<RationalVector> &input, std::size_t columns);

// Row Hermite normal form of the integer lattice spanned by generators:
// basis[i] = sum_j transform[i][j] * generators[j].
struct Hermite {
    std::size_t columns = 0;
    std::size_t generator_count = 0;
    std::vector<IntegerVector> basis;
    std::vector<std::size_t> pivots;
    std::vector<IntegerVector> transform;
};

Hermite hermite(const std::vector<IntegerVector> &generators, std::size_t columns);

// Integer coefficients over the generators reproducing target, or nothing
// when target is outside the lattice.
std::optional<IntegerVector> lattice_coordinates(const Hermite &h, const IntegerVector &target);

} // namespace msing::lattice

#endif
