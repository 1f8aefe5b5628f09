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

#include <msing/kernels.hpp>

#include <atomic>
#include <stdexcept>
#include <string>

namespace msing::kernels {

namespace {

const MonomialKernels *lookup(Isa isa) noexcept
{
    switch (isa) {
        case Isa::scalar:
            return &detail::scalar_kernels();
        case Isa::sse2:
            return detail::sse2_kernels();
        case Isa::avx2:
            return detail::cpu_has_avx2() ? detail::avx2_kernels() : nullptr;
        case Isa::neon:
            return detail::neon_kernels();
    }
    return nullptr;
}

std::atomic<const MonomialKernels *> &current() noexcept
{
    static std::atomic<const MonomialKernels *> selected{lookup(best_available())};
    return selected;
}

} // namespace

std::string_view to_string(Isa isa) noexcept
{
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::sse2:
            return "sse2";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

std::optional<Isa> parse_isa(std::string_view text) noexcept
{
    for (auto isa : {Isa::scalar, Isa::sse2, Isa::avx2, Isa::neon}) {
        if (to_string(isa) == text) {
            return isa;
        }
    }
    return std::nullopt;
}

bool available(Isa isa) noexcept
{
    return lookup(isa) != nullptr;
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out;
    for (auto isa : {Isa::scalar, Isa::sse2, Isa::avx2, Isa::neon}) {
        if (available(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

Isa best_available() noexcept
{
    for (auto isa : {Isa::avx2, Isa::neon, Isa::sse2}) {
        if (available(isa)) {
            return isa;
        }
    }
    return Isa::scalar;
}

const MonomialKernels &get(Isa isa)
{
    const auto *k = lookup(isa);
    if (k == nullptr) {
        throw std::invalid_argument("kernel variant '" + std::string(to_string(isa)) + "' is not available");
    }
    return *k;
}

const MonomialKernels &active() noexcept
{
    return *current().load(std::memory_order_acquire);
}

void select(Isa isa)
{
    current().store(&get(isa), std::memory_order_release);
}

} // namespace msing::kernels
