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
// Text formats for automata, codes, morphisms and block maps, and DOT export.

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "codedshift/codes.hpp"
#include "codedshift/morphisms.hpp"
#include "codedshift/shifts.hpp"

namespace codedshift {

namespace detail {

struct Line {
    std::size_t number;
    std::string text;
};

inline std::string strip(std::string_view s) {
    auto hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

/// Non-empty lines with comments removed.
inline std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string line = strip(text.substr(pos, end - pos));
        if (!line.empty()) out.push_back({number, line});
        pos = end + 1;
    }
    return out;
}

inline std::vector<std::string> fields(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string f; in >> f;) out.push_back(f);
    return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

inline std::size_t parse_index(const std::string& s, std::size_t line) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(line, "expected a state number, got '" + s + "'");
    try {
        return std::stoul(s);
    } catch (const std::exception&) {
        fail(line, "state number out of range: '" + s + "'");
    }
}

inline std::string directive_argument(const Line& l, std::string_view name) {
    std::string rest = strip(std::string_view(l.text).substr(name.size()));
    if (rest.empty()) fail(l.number, std::string(name) + " needs an argument");
    return rest;
}

inline bool starts_with(const std::string& s, std::string_view prefix) {
    return s.size() >= prefix.size() && std::string_view(s).substr(0, prefix.size()) == prefix &&
           (s.size() == prefix.size() || std::isspace(static_cast<unsigned char>(s[prefix.size()])));
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Automaton text: `@alphabet`, optional `@states`, `@initial`, `@terminal`
/// headers, then `src label dst` lines. Edge order is kept.
inline Automaton parse_automaton(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> declared;
    std::vector<State> initial, terminal;
    bool has_initial = false, has_terminal = false;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t max_state = 0;
    bool any_state = false;
    auto note = [&](std::size_t q) {
        max_state = std::max(max_state, q);
        any_state = true;
    };
    for (const auto& l : detail::content_lines(text)) {
        if (l.text[0] == '@') {
            if (detail::starts_with(l.text, "@alphabet")) {
                try {
                    alphabet = Alphabet(detail::directive_argument(l, "@alphabet"));
                } catch (const InputError& e) {
                    detail::fail(l.number, e.what());
                }
            } else if (detail::starts_with(l.text, "@states")) {
                declared = detail::parse_index(detail::directive_argument(l, "@states"), l.number);
            } else if (detail::starts_with(l.text, "@initial") || detail::starts_with(l.text, "@terminal")) {
                bool init = detail::starts_with(l.text, "@initial");
                auto& set = init ? initial : terminal;
                (init ? has_initial : has_terminal) = true;
                auto f = detail::fields(l.text);
                for (std::size_t i = 1; i < f.size(); ++i) {
                    std::size_t q = detail::parse_index(f[i], l.number);
                    note(q);
                    set.push_back(static_cast<State>(q));
                }
            } else {
                detail::fail(l.number, "unknown directive '" + detail::fields(l.text)[0] + "'");
            }
            continue;
        }
        if (!alphabet) detail::fail(l.number, "edge before @alphabet");
        auto f = detail::fields(l.text);
        if (f.size() != 3 || f[1].size() != 1) detail::fail(l.number, "expected 'src label dst'");
        auto label = alphabet->find(f[1][0]);
        if (!label) detail::fail(l.number, "invalid character '" + f[1] + "'");
        std::size_t src = detail::parse_index(f[0], l.number), dst = detail::parse_index(f[2], l.number);
        note(src);
        note(dst);
        Edge e{static_cast<State>(src), *label, static_cast<State>(dst)};
        if (!seen.insert(e).second) detail::fail(l.number, "duplicate edge '" + l.text + "'");
        edges.push_back(e);
    }
    if (!alphabet) throw InputError("missing @alphabet");
    std::size_t n = declared ? *declared : (any_state ? max_state + 1 : 0);
    if (any_state && max_state >= n) throw InputError("state " + std::to_string(max_state) + " exceeds @states");
    if (n == 0) throw InputError("automaton has no states");
    std::vector<State> all(n);
    for (State q = 0; q < n; ++q) all[q] = q;
    return Automaton(*alphabet, n, std::move(edges), has_initial ? initial : all, has_terminal ? terminal : all);
}

/// Canonical text: headers, then edges sorted by (src, label, dst).
inline std::string serialize(const Automaton& a) {
    std::ostringstream out;
    out << "@alphabet " << a.alphabet().chars() << "\n";
    out << "@states " << a.size() << "\n";
    out << "@initial";
    for (State q : a.initial()) out << " " << q;
    out << "\n@terminal";
    for (State q : a.terminal()) out << " " << q;
    out << "\n";
    std::vector<Edge> edges = a.edges();
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges) out << e.src << " " << a.alphabet().display(e.label) << " " << e.dst << "\n";
    return out.str();
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace detail

/// Deterministic DOT: states in index order, edges sorted, parallel edges
/// between the same states merged into one comma-separated label.
inline std::string to_dot(const Automaton& a, const std::vector<bool>& highlight = {}) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (State q : a.initial()) out << "  init" << q << " [shape=point];\n";
    for (State q = 0; q < a.size(); ++q) {
        out << "  " << q << " [label=\"" << detail::dot_escape(a.name(q)) << "\"";
        if (a.is_terminal(q)) out << ", shape=doublecircle";
        if (!highlight.empty() && highlight[q]) out << ", style=dashed";
        out << "];\n";
    }
    for (State q : a.initial()) out << "  init" << q << " -> " << q << ";\n";
    std::vector<Edge> edges = a.edges();
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.src, x.dst, x.label) < std::tie(y.src, y.dst, y.label); });
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        std::string label;
        for (; j < edges.size() && edges[j].src == edges[i].src && edges[j].dst == edges[i].dst; ++j) {
            if (j > i) label += ",";
            label.push_back(a.alphabet().display(edges[j].label));
        }
        out << "  " << edges[i].src << " -> " << edges[i].dst << " [label=\"" << detail::dot_escape(label) << "\"];\n";
        i = j;
    }
    out << "}\n";
    return out.str();
}

using CodeInput = std::variant<Code, RationalExpression>;

/// Code file: one word per line, or a rational expression when any line
/// uses `|*()~` (lines are then joined by union). `@alphabet` is optional.
inline CodeInput parse_code(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::vector<detail::Line> body;
    for (const auto& l : detail::content_lines(text)) {
        if (detail::starts_with(l.text, "@alphabet")) {
            try {
                alphabet = Alphabet(detail::directive_argument(l, "@alphabet"));
            } catch (const InputError& e) {
                detail::fail(l.number, e.what());
            }
            continue;
        }
        if (l.text[0] == '@') detail::fail(l.number, "unknown directive '" + detail::fields(l.text)[0] + "'");
        body.push_back(l);
    }
    if (body.empty()) throw InputError("code file has no words");
    bool expression = false;
    for (const auto& l : body)
        expression = expression || std::any_of(l.text.begin(), l.text.end(), is_expression_syntax);
    if (expression) {
        std::string joined;
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (i) joined += "|";
            joined += "(" + body[i].text + ")";
        }
        return parse_expression(joined, alphabet);
    }
    if (!alphabet) {
        std::string chars;
        for (const auto& l : body) chars += l.text;
        std::sort(chars.begin(), chars.end());
        chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
        for (char c : chars)
            if (std::isspace(static_cast<unsigned char>(c)))
                throw InputError("code words must not contain spaces");
        try {
            alphabet = Alphabet(chars);
        } catch (const InputError& e) {
            throw InputError(std::string("invalid character in code: ") + e.what());
        }
    }
    std::vector<Word> words;
    std::set<Word> seen;
    for (const auto& l : body) {
        Word w;
        for (char c : l.text) {
            auto s = alphabet->find(c);
            if (!s) detail::fail(l.number, std::string("invalid character '") + c + "'");
            w.push_back(*s);
        }
        if (!seen.insert(w).second) detail::fail(l.number, "duplicate word '" + l.text + "'");
        words.push_back(std::move(w));
    }
    return Code(*alphabet, std::move(words));
}

inline std::string serialize(const Code& c) {
    std::string out = "@alphabet " + c.alphabet().chars() + "\n";
    for (const Word& w : c.words()) out += c.alphabet().str(w) + "\n";
    return out;
}

inline std::string serialize(const RationalExpression& e) {
    return "@alphabet " + e.alphabet().chars() + "\n" + e.str() + "\n";
}

/// Morphism file: `b -> word` lines; optional `@alphabet` (source) and
/// `@target`. Without headers the source is the set of left-hand letters
/// and the target the union of all letters used, both sorted.
inline Morphism parse_morphism(std::string_view text) {
    std::optional<Alphabet> source, target;
    std::vector<std::pair<char, std::string>> rules;
    std::vector<std::size_t> numbers;
    for (const auto& l : detail::content_lines(text)) {
        if (l.text[0] == '@') {
            bool is_target = detail::starts_with(l.text, "@target");
            if (!is_target && !detail::starts_with(l.text, "@alphabet"))
                detail::fail(l.number, "unknown directive '" + detail::fields(l.text)[0] + "'");
            try {
                Alphabet a(detail::directive_argument(l, is_target ? "@target" : "@alphabet"));
                (is_target ? target : source) = a;
            } catch (const InputError& e) {
                detail::fail(l.number, e.what());
            }
            continue;
        }
        auto f = detail::fields(l.text);
        if (f.size() != 3 || f[1] != "->" || f[0].size() != 1) detail::fail(l.number, "expected 'b -> word'");
        for (const auto& [b, img] : rules)
            if (b == f[0][0]) detail::fail(l.number, "letter '" + f[0] + "' has two images");
        rules.emplace_back(f[0][0], f[2]);
        numbers.push_back(l.number);
    }
    if (rules.empty()) throw InputError("morphism file has no rules");
    if (!source) {
        std::string chars;
        for (const auto& [b, img] : rules) chars.push_back(b);
        std::sort(chars.begin(), chars.end());
        source = Alphabet(chars);
    }
    if (!target) {
        std::string chars = source->chars();
        for (const auto& [b, img] : rules) chars += img;
        std::sort(chars.begin(), chars.end());
        chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
        try {
            target = Alphabet(chars);
        } catch (const InputError& e) {
            throw InputError(std::string("invalid character in morphism: ") + e.what());
        }
    }
    std::vector<std::optional<Word>> images(source->size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
        auto b = source->find(rules[i].first);
        if (!b) detail::fail(numbers[i], std::string("letter '") + rules[i].first + "' not in the source alphabet");
        Word w;
        for (char c : rules[i].second) {
            auto x = target->find(c);
            if (!x) detail::fail(numbers[i], std::string("invalid character '") + c + "'");
            w.push_back(*x);
        }
        images[*b] = std::move(w);
    }
    std::vector<Word> out;
    for (Symbol b = 0; b < source->size(); ++b) {
        if (!images[b]) throw InputError(std::string("no image for letter '") + source->display(b) + "'");
        out.push_back(*images[b]);
    }
    if (source->chars() == target->chars()) target = source;
    return Morphism(*source, *target, std::move(out));
}

inline std::string serialize(const Morphism& m) {
    std::string out = "@alphabet " + m.source().chars() + "\n@target " + m.target().chars() + "\n";
    for (Symbol b = 0; b < m.source().size(); ++b)
        out += std::string(1, m.source().display(b)) + " -> " + m.target().str(m.image(b)) + "\n";
    return out;
}

/// Block map file: `word -> letter` lines over `source`; optional
/// `@radius m n` (default m = 0) and `@alphabet` for the target letters.
inline BlockMap parse_block_map(std::string_view text, const Alphabet& source) {
    BlockMap f;
    std::optional<std::pair<std::size_t, std::size_t>> radius;
    std::optional<Alphabet> target;
    std::vector<std::tuple<std::size_t, std::string, char>> rules;
    for (const auto& l : detail::content_lines(text)) {
        if (detail::starts_with(l.text, "@radius")) {
            auto fs = detail::fields(l.text);
            if (fs.size() != 3) detail::fail(l.number, "expected '@radius m n'");
            radius = std::make_pair(detail::parse_index(fs[1], l.number), detail::parse_index(fs[2], l.number));
            continue;
        }
        if (detail::starts_with(l.text, "@alphabet")) {
            try {
                target = Alphabet(detail::directive_argument(l, "@alphabet"));
            } catch (const InputError& e) {
                detail::fail(l.number, e.what());
            }
            continue;
        }
        if (l.text[0] == '@') detail::fail(l.number, "unknown directive '" + detail::fields(l.text)[0] + "'");
        auto fs = detail::fields(l.text);
        if (fs.size() != 3 || fs[1] != "->" || fs[2].size() != 1) detail::fail(l.number, "expected 'word -> letter'");
        rules.emplace_back(l.number, fs[0], fs[2][0]);
    }
    if (rules.empty()) throw InputError("block map has no entries");
    const std::size_t window = std::get<1>(rules.front()).size();
    if (!radius) radius = std::make_pair(std::size_t{0}, window - 1);
    f.left = radius->first;
    f.right = radius->second;
    if (!target) {
        std::string chars;
        for (const auto& r : rules) chars.push_back(std::get<2>(r));
        std::sort(chars.begin(), chars.end());
        chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
        target = Alphabet(chars);
    }
    f.target = *target;
    for (const auto& [number, word, letter] : rules) {
        if (word.size() != f.window())
            detail::fail(number, "block '" + word + "' does not have length " + std::to_string(f.window()));
        Word w;
        for (char c : word) {
            auto s = source.find(c);
            if (!s) detail::fail(number, std::string("invalid character '") + c + "'");
            w.push_back(*s);
        }
        auto y = f.target.find(letter);
        if (!y) detail::fail(number, std::string("letter '") + letter + "' not in the target alphabet");
        if (!f.table.emplace(w, *y).second) detail::fail(number, "duplicate block '" + word + "'");
    }
    return f;
}

inline std::string serialize(const BlockMap& f, const Alphabet& source) {
    std::string out = "@radius " + std::to_string(f.left) + " " + std::to_string(f.right) + "\n@alphabet " +
                      f.target.chars() + "\n";
    for (const auto& [w, y] : f.table) out += source.str(w) + " -> " + std::string(1, f.target.display(y)) + "\n";
    return out;
}

}  // namespace codedshift
