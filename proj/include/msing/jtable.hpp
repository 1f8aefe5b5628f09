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


#ifndef MSING_JTABLE_HPP
#define MSING_JTABLE_HPP

#include <array>
#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <msing/algebra.hpp>
#include <msing/monomial.hpp>
#include <msing/rational.hpp>

namespace msing {

// Images of the 16 generators under the adjacency homomorphism J.
// Immutable once built. Construction accepts incomplete or inconsistent
// tables so that validate_jtable can report on them.
class JTable {
public:
    JTable() = default;

    // Parses "J(<gen>) = <element>" lines. Throws ParseError on syntax
    // errors and Error on a generator listed twice.
    static JTable parse(std::string_view text);
    static JTable load(const std::filesystem::path &file);

    void set(Generator g, AlgebraElement image);

    bool has(Generator g) const noexcept
    {
        return entries_[index(g)].has_value();
    }

    std::size_t size() const noexcept;

    // Throws Error if the entry is missing.
    const AlgebraElement &j_generator(Generator g) const;

private:
    std::array<std::optional<AlgebraElement>, generator_count> entries_;
};

// Directory holding the shipped data files.
std::filesystem::path default_data_dir();

// Multiplicative extension of a JTable with a memo cache. Safe to call
// from several threads at once.
class JEvaluator {
public:
    explicit JEvaluator(std::shared_ptr<const JTable> table);

    const JTable &table() const noexcept
    {
        return *table_;
    }

    // J(X) truncated to bounds (unbounded by default). Throws
    // UnclassifiedTypeError when codim(X) > 5.
    AlgebraElement j_monomial(const Monomial &x,
                              const TruncationBounds &bounds = TruncationBounds::unbounded()) const;

    // J_A(X) = (-1)^codim(A) * coefficient of A in J(X); J_X(X) = 1.
    Integer adjacency_index(const Monomial &a, const Monomial &x) const;

    std::size_t cache_size() const;

private:
    using Entry = std::pair<TruncationBounds, std::shared_ptr<const AlgebraElement>>;

    std::shared_ptr<const AlgebraElement> lookup(const Monomial &x, const TruncationBounds &bounds) const;
    // A cached image at bounds dominating the request, not truncated.
    std::shared_ptr<const AlgebraElement> dominating(const Monomial &x, const TruncationBounds &bounds) const;
    std::shared_ptr<const AlgebraElement> compute(const Monomial &x, const TruncationBounds &bounds) const;

    std::shared_ptr<const JTable> table_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Monomial, std::vector<Entry>, MonomialHash> cache_;
};

struct JTableCheck {
    std::string name;
    bool passed = true;
    // One line per offending entry.
    std::vector<std::string> failures;
};

struct JTableReport {
    std::vector<JTableCheck> checks;

    bool ok() const noexcept;
};

// Structural checks: 16 entries, J(1) = 1, J(A1) = A1, codim and A1
// monotonicity, diagonal sign (-1)^codim(g), integer coefficients.
JTableReport validate_jtable(const JTable &table);

} // namespace msing

#endif
