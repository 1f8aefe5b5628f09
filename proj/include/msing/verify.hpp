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

#ifndef MSING_VERIFY_HPP
#define MSING_VERIFY_HPP

#include <string>
#include <vector>

#include <msing/fixtures.hpp>
#include <msing/relations.hpp>

namespace msing {

struct SectionReport {
    std::string name;
    bool skipped = false;
    std::vector<DiffEntry> diffs;
    // Human-readable lines (counts, witnesses, skip reasons).
    std::vector<std::string> notes;

    bool passed() const noexcept
    {
        return skipped || diffs.empty();
    }
};

struct VerifyReport {
    int dim = 5;
    int a1_max = default_a1_max;
    std::vector<SectionReport> sections;

    bool ok() const noexcept;
    const SectionReport *find(const std::string &name) const;
};

// Derives everything from the fixture J table and compares it with the
// fixture rows. The fixture sections need dim 5 and are skipped
// otherwise; dims 3 and 4 are always derived for the classical checks.
VerifyReport verify(const FixtureSet &fixtures, int dim = 5, int a1_max = default_a1_max);

} // namespace msing

#endif
