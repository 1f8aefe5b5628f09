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

#ifndef MSING_RATIONAL_HPP
#define MSING_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace msing {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" or "p/q" in lowest terms, q > 0.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise or on a
// zero denominator.
Rational parse_rational(std::string_view text);

// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
inline Rational make_rational(const Integer &num, const Integer &den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

} // namespace msing

#endif
