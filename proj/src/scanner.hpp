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

#ifndef MSING_SRC_SCANNER_HPP
#define MSING_SRC_SCANNER_HPP

// Character-level scanner shared by the type grammar and the formula DSL.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <msing/error.hpp>
#include <msing/monomial.hpp>

namespace msing::detail {

class Scanner {
public:
    explicit Scanner(std::string_view text, std::size_t line = 0) : text_(text), line_(line) {}

    bool at_end() const noexcept
    {
        return pos_ >= text_.size();
    }

    char peek(std::size_t ahead = 0) const noexcept
    {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance(std::size_t n = 1) noexcept
    {
        pos_ += n;
    }

    std::size_t position() const noexcept
    {
        return pos_;
    }

    void skip_spaces() noexcept
    {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
            ++pos_;
        }
    }

    bool consume(char c) noexcept
    {
        if (peek() == c && !at_end()) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!consume(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    [[noreturn]] void fail(const std::string &message) const
    {
        throw ParseError(message, line_, pos_ + 1);
    }

    [[noreturn]] void fail_at(const std::string &message, std::size_t pos) const
    {
        throw ParseError(message, line_, pos + 1);
    }

    // Reads a run of decimal digits; fails if there is none.
    long long read_integer();

    bool at_factor() const noexcept
    {
        const char c = peek();
        return !at_end() && (c == 'A' || c == 'D' || c == 'E');
    }

    // The literal unit type "1": a '1' not continuing a number or coefficient.
    bool at_unit() const noexcept;

    struct Factor {
        Generator generator;
        int exponent = 1;
        // Set for a symbolic A1 exponent "{k}" / "{k-s}" (holds s).
        std::optional<int> shift;
    };

    Factor read_factor(Notation notation, bool allow_symbolic);

    struct Type {
        Monomial base;
        std::optional<int> shift;
    };

    // type := "1" | factor (SP factor)*. Stops before the first character
    // that cannot continue the type.
    Type read_type(Notation notation, bool allow_symbolic);

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

} // namespace msing::detail

#endif
