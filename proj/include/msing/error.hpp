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

#ifndef MSING_ERROR_HPP
#define MSING_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msing {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text that does not match the type grammar or the formula DSL. Line and
// column are 1-based; line 0 means "not attached to a file".
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept
    {
        return line_;
    }
    std::size_t column() const noexcept
    {
        return column_;
    }

private:
    std::size_t line_;
    std::size_t column_;
};

// A query outside the classified range (codim > 5).
class UnclassifiedTypeError : public Error {
public:
    using Error::Error;
};

// The derivation contradicted one of its own structural guarantees, which
// points at corrupted input data (typically the J table).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace msing

#endif
