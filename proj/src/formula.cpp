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

#include <msing/formula.hpp>

#include <algorithm>

namespace msing {

std::string_view to_string(Hypothesis h) noexcept
{
    switch (h) {
        case Hypothesis::H0:
            return "H0";
        case Hypothesis::H1:
            return "H1";
        case Hypothesis::H2:
            return "H2";
    }
    return "?";
}

std::optional<Hypothesis> parse_hypothesis(std::string_view text) noexcept
{
    for (auto h : {Hypothesis::H0, Hypothesis::H1, Hypothesis::H2}) {
        if (to_string(h) == text) {
            return h;
        }
    }
    return std::nullopt;
}

int ParametricFormula::max_shift() const noexcept
{
    int s = 0;
    for (const auto &[key, c] : terms) {
        s = std::max(s, key.shift);
    }
    return s;
}

AlgebraElement ParametricFormula::instantiate(int k) const
{
    AlgebraElement out;
    for (const auto &[key, c] : terms) {
        if (k - key.shift >= 0) {
            out.add_term(key.base.with_a1(k - key.shift), c);
        }
    }
    return out;
}

} // namespace msing
