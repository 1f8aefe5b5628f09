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

#ifndef MSING_SERIALIZE_HPP
#define MSING_SERIALIZE_HPP

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include <msing/algebra.hpp>
#include <msing/fixtures.hpp>
#include <msing/formula.hpp>

namespace msing {

using Json = nlohmann::ordered_json;

// [{"type": "D5+ A2", "coeff": "1/2"}, ...] in the graded order.
Json element_to_json(const AlgebraElement &e, Notation notation = Notation::signed_types);
AlgebraElement element_from_json(const Json &j, Notation notation = Notation::signed_types);

Json to_json(const SolvedFormula &f);
Json to_json(const ParametricFormula &f);
Json to_json(const CaFormula &f);
Json to_json(const DiffEntry &d);

ParametricFormula parametric_from_json(const Json &j);
CaFormula ca_from_json(const Json &j);

// One DSL line each, parseable by parse_document.
std::string to_dsl(const SolvedFormula &f);
std::string to_dsl(const ParametricFormula &f);
std::string to_dsl(const CaFormula &f);

} // namespace msing

#endif
