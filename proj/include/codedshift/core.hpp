/* Copyright 2026 The codedshift Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Symbols, alphabets, words and the error types shared by every module.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codedshift {

/// Malformed or out-of-contract input (CLI exit code 1).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A broken internal invariant; always a bug (CLI exit code 2).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw InvariantError(what);
}

using Symbol = std::uint32_t;
using State = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr State kNoState = static_cast<State>(-1);

/// Shortlex order: shorter words first, equal lengths compared lexicographically.
struct ShortLex {
    bool operator()(const Word& lhs, const Word& rhs) const {
        if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
        return lhs < rhs;
    }
};

using WordSet = std::set<Word, ShortLex>;

inline Word concat(const Word& lhs, const Word& rhs) {
    Word out;
    out.reserve(lhs.size() + rhs.size());
    out.insert(out.end(), lhs.begin(), lhs.end());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

inline Word power(const Word& w, std::size_t n) {
    Word out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

inline bool is_prefix(const Word& prefix, const Word& w) {
    return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

inline bool is_suffix(const Word& suffix, const Word& w) {
    return suffix.size() <= w.size() &&
           std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

inline bool is_factor(const Word& factor, const Word& w) {
    if (factor.empty()) return true;
    return std::search(w.begin(), w.end(), factor.begin(), factor.end()) != w.end();
}

inline Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
                w.begin() + static_cast<std::ptrdiff_t>(to));
}

/// Ordered set of display characters; symbol ids are positions in the list.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::string_view chars) : chars_(chars) {
        if (chars_.empty()) throw InputError("alphabet must not be empty");
        for (char c : chars_) {
            if (c <= ' ' || c == '#' || c > '~')
                throw InputError(std::string("invalid alphabet character '") + c + "'");
        }
        std::string sorted = chars_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("duplicate character in alphabet '" + chars_ + "'");
    }

    /// Alphabet of `n` symbols with generated display characters (letters first).
    static Alphabet indexed(std::size_t n) {
        static constexpr std::string_view pool =
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
            "!$%&'+,-.:;<=>?@[]^_`{}";
        if (n == 0 || n > pool.size())
            throw InputError("cannot generate an alphabet of " + std::to_string(n) + " symbols");
        return Alphabet(pool.substr(0, n));
    }

    std::size_t size() const { return chars_.size(); }
    const std::string& chars() const { return chars_; }
    char display(Symbol s) const { return chars_.at(s); }

    std::optional<Symbol> find(char c) const {
        auto pos = chars_.find(c);
        if (pos == std::string::npos) return std::nullopt;
        return static_cast<Symbol>(pos);
    }

    Symbol symbol(char c) const {
        auto s = find(c);
        if (!s) throw InputError(std::string("character '") + c + "' not in alphabet '" + chars_ + "'");
        return *s;
    }

    Word word(std::string_view text) const {
        Word w;
        w.reserve(text.size());
        for (char c : text) w.push_back(symbol(c));
        return w;
    }

    std::string str(const Word& w) const {
        std::string out;
        out.reserve(w.size());
        for (Symbol s : w) out.push_back(display(s));
        return out;
    }

    bool operator==(const Alphabet&) const = default;

private:
    std::string chars_;
};

}  // namespace codedshift
