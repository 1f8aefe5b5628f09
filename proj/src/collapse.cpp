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

#include <msing/relations.hpp>

#include <set>

#include <msing/error.hpp>

namespace msing {

std::vector<CaFormula> collapse_signs(std::span<const CaFormula> rows)
{
    std::map<Monomial, const CaFormula *> by_lhs;
    for (const auto &r : rows) {
        if (r.notation != Notation::signed_types) {
            throw std::invalid_argument("collapse_signs expects rows in signed notation");
        }
        if (!by_lhs.emplace(r.lhs, &r).second) {
            throw ConsistencyError("row for " + format_type(r.lhs) + " given twice");
        }
    }

    std::set<Monomial> representatives;
    for (const auto &r : rows) {
        representatives.insert(collapse(r.lhs));
    }

    std::vector<CaFormula> out;
    for (const auto &rep : representatives) {
        CaFormula merged;
        merged.lhs = rep;
        merged.notation = Notation::collapsed;
        AlgebraElement sum;
        for (const auto &member : collapse_fiber(rep)) {
            const auto it = by_lhs.find(member);
            if (it == by_lhs.end()) {
                throw ConsistencyError("cannot collapse " + format_type(rep, Notation::collapsed) + ": row for " +
                                       format_type(member) + " is missing");
            }
            sum += it->second->rhs;
            merged.hypothesis = std::max(merged.hypothesis, it->second->hypothesis);
        }

        // Every collapsed term needs one coefficient shared by its fiber.
        std::set<Monomial> seen;
        for (const auto &[m, c] : sum) {
            const auto term = collapse(m);
            if (!seen.insert(term).second) {
                continue;
            }
            for (const auto &member : collapse_fiber(term)) {
                if (sum.coefficient(member) != c) {
                    throw ConsistencyError("collapsed row " + format_type(rep, Notation::collapsed) +
                                           ": coefficients of " + format_type(m) + " and " + format_type(member) +
                                           " differ");
                }
            }
            merged.rhs.add_term(term, c);
        }
        out.push_back(std::move(merged));
    }
    return out;
}

} // namespace msing
