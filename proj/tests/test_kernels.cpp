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

#include <doctest.h>

#include <msing/algebra.hpp>
#include <msing/kernels.hpp>

#include "properties.hpp"

using namespace msing;

TEST_SUITE("kernels")
{
    TEST_CASE("SIMD variants agree with the scalar kernels")
    {
        const auto r = testing::kernel_equivalence(7, 400);
        for (const auto &f : r.failures) {
            FAIL_CHECK(f);
        }
        CHECK(r.cases > 0);
    }

    TEST_CASE("products do not depend on the selected kernel")
    {
        std::mt19937_64 rng(11);
        const auto bounds = TruncationBounds::make(5, 6);
        std::vector<std::pair<AlgebraElement, AlgebraElement>> inputs;
        for (int i = 0; i < 100; ++i) {
            inputs.emplace_back(testing::random_element(rng, 4, 3, 8), testing::random_element(rng, 4, 3, 8));
        }
        kernels::select(kernels::Isa::scalar);
        std::vector<AlgebraElement> expected;
        for (const auto &[a, b] : inputs) {
            expected.push_back(mul(a, b, bounds));
        }
        for (const auto isa : kernels::available_isas()) {
            CAPTURE(kernels::to_string(isa));
            kernels::select(isa);
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                CHECK(mul(inputs[i].first, inputs[i].second, bounds) == expected[i]);
            }
        }
        kernels::select(kernels::best_available());
    }

    TEST_CASE("selection")
    {
        CHECK(kernels::available(kernels::Isa::scalar));
        CHECK(kernels::parse_isa("avx2") == kernels::Isa::avx2);
        CHECK_FALSE(kernels::parse_isa("sse9").has_value());
        for (const auto isa : {kernels::Isa::sse2, kernels::Isa::avx2, kernels::Isa::neon}) {
            if (!kernels::available(isa)) {
                CHECK_THROWS_AS(kernels::get(isa), std::invalid_argument);
            }
        }
        CHECK(kernels::active().isa == kernels::best_available());
    }
}
