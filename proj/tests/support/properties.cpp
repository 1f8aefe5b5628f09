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

#include "properties.hpp"

#include <map>
#include <mutex>
#include <utility>

#include <msing/dsl.hpp>
#include <msing/kernels.hpp>

namespace msing::testing {

void PropertyResult::check(bool condition, const std::string &what)
{
    ++cases;
    if (!condition && failures.size() < 20) {
        failures.push_back(what);
    }
}

std::shared_ptr<const JTable> shipped_table()
{
    static const auto table = std::make_shared<const JTable>(JTable::load(default_data_dir() / "jtable.txt"));
    return table;
}

const JEvaluator &shipped_evaluator()
{
    static const JEvaluator j(shipped_table());
    return j;
}

const FixtureSet &shipped_fixtures()
{
    static const auto fx = load_fixtures(default_data_dir());
    return fx;
}

const Derivation &derivation(int dim, int a1_max)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Derivation> cache;
    const std::lock_guard lock(mutex);
    auto it = cache.find({dim, a1_max});
    if (it == cache.end()) {
        it = cache.emplace(std::pair{dim, a1_max}, derive(shipped_evaluator(), dim, a1_max)).first;
    }
    return it->second;
}

Monomial random_type(std::mt19937_64 &rng, int max_codim, int max_a1)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<Monomial>> pools;
    const std::vector<Monomial> *pool = nullptr;
    {
        const std::lock_guard lock(mutex);
        auto &p = pools[{max_codim, max_a1}];
        if (p.empty()) {
            p = enumerate_types(max_codim, max_a1);
        }
        pool = &p;
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool->size() - 1);
    return (*pool)[pick(rng)];
}

AlgebraElement random_element(std::mt19937_64 &rng, int max_codim, int max_a1, int max_terms)
{
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    AlgebraElement e;
    for (int n = terms(rng); n > 0; --n) {
        e.add_term(random_type(rng, max_codim, max_a1), make_rational(num(rng), den(rng)));
    }
    return e;
}

PropertyResult ring_laws(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> codim_bound(2, 5);
    std::uniform_int_distribution<int> a1_bound(0, 4);
    PropertyResult r;
    for (std::size_t i = 0; i < cases; ++i) {
        const auto bounds = TruncationBounds::make(codim_bound(rng), a1_bound(rng));
        const auto a = random_element(rng, 3, 2);
        const auto b = random_element(rng, 3, 2);
        const auto c = random_element(rng, 3, 2);
        const auto tag = " (case " + std::to_string(i) + ")";

        r.check(mul(mul(a, b, bounds), c, bounds) == mul(a, mul(b, c, bounds), bounds), "associativity" + tag);
        r.check(mul(a, b, bounds) == mul(b, a, bounds), "commutativity" + tag);
        r.check(mul(a, b + c, bounds) == mul(a, b, bounds) + mul(a, c, bounds), "distributivity" + tag);
        r.check(mul(a, AlgebraElement::one(), bounds) == a.truncated(bounds), "unit" + tag);

        const auto full = mul(a, b, TruncationBounds::unbounded());
        r.check(full.truncated(bounds) == mul(a.truncated(bounds), b.truncated(bounds), bounds),
                "truncation coherence" + tag);

        // x without unit term, so the series is well defined.
        AlgebraElement x;
        for (const auto &[m, q] : random_element(rng, 3, 2)) {
            if (!m.is_unit()) {
                x.add_term(m, q);
            }
        }
        const auto g = geometric_partial_sum(x, bounds);
        r.check(mul(g, AlgebraElement::one() - x, bounds) == AlgebraElement::one().truncated(bounds),
                "geometric series" + tag);
    }
    return r;
}

PropertyResult j_multiplicativity(const JEvaluator &j, std::uint64_t seed, std::size_t pairs)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> a1(0, 3);
    PropertyResult r;
    std::size_t done = 0;
    while (done < pairs) {
        const auto x = random_type(rng, 5, 3);
        const auto y = random_type(rng, 5 - x.codim(), 3);
        ++done;
        const auto tag = " for " + format_type(x) + " * " + format_type(y);
        const auto unbounded = TruncationBounds::unbounded();
        const auto product = mul(j.j_monomial(x), j.j_monomial(y), unbounded);
        r.check(j.j_monomial(x * y) == product, "J multiplicative" + tag);
        const auto bounds = TruncationBounds::make(5, a1(rng) + 3);
        r.check(j.j_monomial(x * y, bounds) == product.truncated(bounds), "J truncated" + tag);
    }
    return r;
}

PropertyResult equation_forms(const JEvaluator &j, int dim, int a1_max)
{
    PropertyResult r;
    const auto system = build_system(j, dim, a1_max);
    for (const auto &eq : system.equations) {
        r.check(half_sum_form(j, eq.index, dim, a1_max) == rearranged(eq),
                "half-sum form differs for " + format_type(eq.index) + " at dim " + std::to_string(dim));
    }
    return r;
}

PropertyResult zero_residual(const Derivation &d)
{
    PropertyResult r;
    const auto worst = residual_check(d.solved, d.system);
    r.check(worst == 0, "residual " + to_string(worst) + " at dim " + std::to_string(d.system.dim));
    for (const auto &res : residuals(d.solved, d.system)) {
        r.check(false, "nonzero residual for " + format_type(res.index));
    }
    return r;
}

PropertyResult solved_k_independence(const JEvaluator &j, int dim, int k_small, int k_large)
{
    PropertyResult r;
    const auto small = build_system(j, dim, k_small);
    const auto large = build_system(j, dim, k_large);
    for (const auto &eq : small.equations) {
        const auto *other = large.find(eq.index);
        r.check(other != nullptr && other->coefficients == eq.coefficients,
                "equation for " + format_type(eq.index));
    }
    std::map<Monomial, AlgebraElement> wide;
    for (const auto &f : solve(large)) {
        wide.emplace(f.lhs, f.rhs);
    }
    for (const auto &f : solve(small)) {
        const auto it = wide.find(f.lhs);
        r.check(it != wide.end() && it->second == f.rhs, "solved formula for " + format_type(f.lhs));
    }
    return r;
}

PropertyResult row_k_independence(const Derivation &small, const Derivation &large)
{
    PropertyResult r;
    r.check(small.parametric.size() == large.parametric.size(), "parametric row count");
    for (const auto &d : compare("K", small.parametric, large.parametric)) {
        r.check(false, d.lhs + " " + d.term + ": " + d.expected + " vs " + d.actual);
    }
    for (const auto &d : compare("K", small.ca, large.ca)) {
        r.check(false, d.lhs + " " + d.term + ": " + d.expected + " vs " + d.actual);
    }
    r.check(true, "rows compared");
    return r;
}

PropertyResult fixture_telescoping(const FixtureSet &fx)
{
    PropertyResult r;
    const auto p = formulas_of(std::span<const ParametricFixture>(fx.parametric));
    const auto c = formulas_of(std::span<const CaFixture>(fx.ca));
    for (const auto &d : telescoping_check(p, c)) {
        r.check(false, d.lhs + " " + d.term + ": " + d.expected + " vs " + d.actual);
    }
    r.check(p.size() == c.size(), "one ca row per family row");
    return r;
}

PropertyResult fixture_collapse(const FixtureSet &fx)
{
    PropertyResult r;
    const auto c = formulas_of(std::span<const CaFixture>(fx.ca));
    const auto t = formulas_of(std::span<const CaFixture>(fx.collapsed));
    for (const auto &d : compare("collapse", collapse_signs(c), t)) {
        r.check(false, d.lhs + " " + d.term + ": " + d.expected + " vs " + d.actual);
    }
    r.check(!t.empty(), "collapsed rows present");
    return r;
}

PropertyResult kernel_equivalence(std::uint64_t seed, std::size_t batches)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<int> any(0, kernels::max_exponent);
    std::uniform_int_distribution<int> count(0, 67);
    std::uniform_int_distribution<int> codim(0, 6);
    std::uniform_int_distribution<int> a1(0, 8);
    const auto &ref = kernels::get(kernels::Isa::scalar);
    PropertyResult r;
    for (const auto isa : kernels::available_isas()) {
        const auto &k = kernels::get(isa);
        for (std::size_t b = 0; b < batches; ++b) {
            const std::size_t n = count(rng);
            // Mostly small exponents, occasionally near the overflow edge.
            const bool edge = b % 7 == 0;
            const auto draw = [&] { return static_cast<std::uint8_t>(edge ? any(rng) : small(rng)); };
            alignas(16) std::uint8_t base[kernels::lane_bytes];
            for (auto &e : base) {
                e = draw();
            }
            std::vector<Monomial> terms(n);
            for (auto &t : terms) {
                Monomial::Exponents ex{};
                for (auto &e : ex) {
                    e = draw();
                }
                t = Monomial(ex);
            }
            const auto *raw = reinterpret_cast<const std::uint8_t *>(terms.data());
            const int mc = codim(rng);
            const int ma = a1(rng);
            std::vector<Monomial> out_ref(n), out(n);
            std::vector<std::uint8_t> keep_ref(n), keep(n);
            const bool of_ref = ref.multiply_batch(base, raw, n, mc, ma,
                                                   reinterpret_cast<std::uint8_t *>(out_ref.data()), keep_ref.data());
            const bool of = k.multiply_batch(base, raw, n, mc, ma, reinterpret_cast<std::uint8_t *>(out.data()),
                                             keep.data());
            const auto tag = std::string(k.name) + " batch " + std::to_string(b);
            r.check(of == of_ref, "overflow flag, " + tag);
            r.check(keep == keep_ref, "keep mask, " + tag);
            bool same = true;
            for (std::size_t i = 0; i < n; ++i) {
                same = same && (!keep_ref[i] || out[i] == out_ref[i]);
            }
            r.check(same, "products, " + tag);

            std::vector<std::int32_t> cod_ref(n), cod(n);
            ref.codim_batch(raw, n, cod_ref.data());
            k.codim_batch(raw, n, cod.data());
            r.check(cod == cod_ref, "codims, " + tag);
        }
    }
    return r;
}

} // namespace msing::testing
