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
// Rational expressions: syntax trees with light algebraic normalization,
// a parser/printer for the `| * ( ) ~` syntax, the position (Glushkov)
// automaton, and state elimination back to expressions.

#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codedshift/algorithms.hpp"
#include "codedshift/automaton.hpp"

namespace codedshift {

namespace rx {

enum class Kind { empty, epsilon, letter, alt, cat, star };

struct Node;
using Ptr = std::shared_ptr<const Node>;

struct Node {
    Kind kind = Kind::empty;
    Symbol letter = 0;
    std::vector<Ptr> children;
    std::string key;  // structural identity, used for sorting and deduplication
};

inline Ptr make(Kind kind, Symbol letter, std::vector<Ptr> children) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->letter = letter;
    n->children = std::move(children);
    switch (kind) {
        case Kind::empty: n->key = "0"; break;
        case Kind::epsilon: n->key = "1"; break;
        case Kind::letter: n->key = "L" + std::to_string(letter); break;
        case Kind::star: n->key = "S(" + n->children[0]->key + ")"; break;
        case Kind::alt:
        case Kind::cat: {
            n->key = kind == Kind::alt ? "U(" : "C(";
            for (std::size_t i = 0; i < n->children.size(); ++i) {
                if (i) n->key += ",";
                n->key += n->children[i]->key;
            }
            n->key += ")";
            break;
        }
    }
    return n;
}

inline Ptr empty() {
    static const Ptr e = make(Kind::empty, 0, {});
    return e;
}

inline Ptr epsilon() {
    static const Ptr e = make(Kind::epsilon, 0, {});
    return e;
}

inline Ptr letter(Symbol s) { return make(Kind::letter, s, {}); }

inline bool nullable(const Ptr& e) {
    switch (e->kind) {
        case Kind::empty: return false;
        case Kind::epsilon: return true;
        case Kind::letter: return false;
        case Kind::star: return true;
        case Kind::alt:
            return std::any_of(e->children.begin(), e->children.end(),
                               [](const Ptr& c) { return nullable(c); });
        case Kind::cat:
            return std::all_of(e->children.begin(), e->children.end(),
                               [](const Ptr& c) { return nullable(c); });
    }
    return false;
}

/// Concatenation factors of an expression (epsilon has none).
inline std::vector<Ptr> factors(const Ptr& e) {
    if (e->kind == Kind::epsilon) return {};
    if (e->kind == Kind::cat) return e->children;
    return {e};
}

inline bool same(const std::vector<Ptr>& x, const std::vector<Ptr>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]->key != y[i]->key) return false;
    return true;
}

Ptr alt(std::vector<Ptr> parts);

inline Ptr cat(std::vector<Ptr> parts) {
    std::vector<Ptr> flat;
    for (const Ptr& p : parts) {
        if (p->kind == Kind::empty) return empty();
        if (p->kind == Kind::epsilon) continue;
        if (p->kind == Kind::cat)
            flat.insert(flat.end(), p->children.begin(), p->children.end());
        else
            flat.push_back(p);
    }
    if (flat.empty()) return epsilon();
    if (flat.size() == 1) return flat[0];
    return make(Kind::cat, 0, std::move(flat));
}

inline Ptr cat(const Ptr& x, const Ptr& y) { return cat(std::vector<Ptr>{x, y}); }

inline Ptr star(const Ptr& x) {
    if (x->kind == Kind::empty || x->kind == Kind::epsilon) return epsilon();
    if (x->kind == Kind::star) return x;
    if (x->kind == Kind::alt) {
        std::vector<Ptr> rest;
        for (const Ptr& c : x->children)
            if (c->kind != Kind::epsilon) rest.push_back(c->kind == Kind::star ? c->children[0] : c);
        if (rest.size() != x->children.size()) return star(alt(rest));
    }
    return make(Kind::star, 0, {x});
}

inline bool shortlex_key(const Ptr& x, const Ptr& y) {
    if (x->key.size() != y->key.size()) return x->key.size() < y->key.size();
    return x->key < y->key;
}

/// Union with flattening, deduplication, sorted branches, common prefix and
/// suffix factoring, and the rule  ~ | XX*  =  X*.
inline Ptr alt(std::vector<Ptr> parts) {
    std::vector<Ptr> flat;
    for (const Ptr& p : parts) {
        if (p->kind == Kind::empty) continue;
        if (p->kind == Kind::alt)
            flat.insert(flat.end(), p->children.begin(), p->children.end());
        else
            flat.push_back(p);
    }
    std::sort(flat.begin(), flat.end(), shortlex_key);
    flat.erase(std::unique(flat.begin(), flat.end(),
                           [](const Ptr& x, const Ptr& y) { return x->key == y->key; }),
               flat.end());
    bool has_epsilon = false, other_nullable = false;
    for (const Ptr& p : flat) {
        if (p->kind == Kind::epsilon)
            has_epsilon = true;
        else if (nullable(p))
            other_nullable = true;
    }
    if (has_epsilon && other_nullable)
        flat.erase(std::remove_if(flat.begin(), flat.end(),
                                  [](const Ptr& p) { return p->kind == Kind::epsilon; }),
                   flat.end());
    if (flat.empty()) return empty();
    if (flat.size() == 1) return flat[0];

    std::vector<std::vector<Ptr>> seqs;
    for (const Ptr& p : flat) seqs.push_back(factors(p));
    std::size_t shortest = seqs[0].size();
    for (const auto& s : seqs) shortest = std::min(shortest, s.size());

    std::size_t suffix = 0;
    while (suffix < shortest) {
        const Ptr& probe = seqs[0][seqs[0].size() - 1 - suffix];
        bool all = std::all_of(seqs.begin(), seqs.end(), [&](const std::vector<Ptr>& s) {
            return s[s.size() - 1 - suffix]->key == probe->key;
        });
        if (!all) break;
        ++suffix;
    }
    if (suffix > 0) {
        std::vector<Ptr> heads;
        for (const auto& s : seqs) heads.push_back(cat(std::vector<Ptr>(s.begin(), s.end() - suffix)));
        std::vector<Ptr> tail(seqs[0].end() - suffix, seqs[0].end());
        tail.insert(tail.begin(), alt(heads));
        return cat(tail);
    }
    std::size_t prefix = 0;
    while (prefix < shortest) {
        const Ptr& probe = seqs[0][prefix];
        bool all = std::all_of(seqs.begin(), seqs.end(),
                               [&](const std::vector<Ptr>& s) { return s[prefix]->key == probe->key; });
        if (!all) break;
        ++prefix;
    }
    if (prefix > 0) {
        std::vector<Ptr> tails;
        for (const auto& s : seqs) tails.push_back(cat(std::vector<Ptr>(s.begin() + prefix, s.end())));
        std::vector<Ptr> head(seqs[0].begin(), seqs[0].begin() + prefix);
        head.push_back(alt(tails));
        return cat(head);
    }
    if (flat.size() == 2 && flat[0]->kind == Kind::epsilon) {
        const auto& s = seqs[1];
        if (!s.empty() && s.back()->kind == Kind::star) {
            std::vector<Ptr> body(s.begin(), s.end() - 1);
            if (same(body, factors(s.back()->children[0]))) return s.back();
        }
        if (!s.empty() && s.front()->kind == Kind::star) {
            std::vector<Ptr> body(s.begin() + 1, s.end());
            if (same(body, factors(s.front()->children[0]))) return s.front();
        }
    }
    return make(Kind::alt, 0, std::move(flat));
}

inline Ptr alt(const Ptr& x, const Ptr& y) { return alt(std::vector<Ptr>{x, y}); }

inline Ptr word(const Word& w) {
    std::vector<Ptr> parts;
    for (Symbol s : w) parts.push_back(letter(s));
    return cat(parts);
}

}  // namespace rx

/// A rational expression over a fixed alphabet.
class RationalExpression {
public:
    RationalExpression() : root_(rx::empty()) {}
    RationalExpression(Alphabet alphabet, rx::Ptr root)
        : alphabet_(std::move(alphabet)), root_(std::move(root)) {}

    static RationalExpression of_words(const Alphabet& alphabet, const std::vector<Word>& words) {
        std::vector<rx::Ptr> parts;
        for (const Word& w : words) parts.push_back(rx::word(w));
        return RationalExpression(alphabet, rx::alt(parts));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const rx::Ptr& root() const { return root_; }
    bool nullable() const { return rx::nullable(root_); }
    bool is_empty_set() const { return root_->kind == rx::Kind::empty; }

    std::string str() const { return print(root_, 0); }

private:
    // Precedence: 0 union, 1 concatenation, 2 star operand.
    std::string print(const rx::Ptr& e, int context) const {
        using rx::Kind;
        switch (e->kind) {
            case Kind::empty: return "()";
            case Kind::epsilon: return "~";
            case Kind::letter: return std::string(1, alphabet_.display(e->letter));
            case Kind::star: return print(e->children[0], 2) + "*";
            case Kind::alt: {
                std::string s;
                for (std::size_t i = 0; i < e->children.size(); ++i) {
                    if (i) s += "|";
                    s += print(e->children[i], 0);
                }
                return context > 0 ? "(" + s + ")" : s;
            }
            case Kind::cat: {
                std::string s;
                for (const auto& c : e->children) s += print(c, 1);
                return context > 1 ? "(" + s + ")" : s;
            }
        }
        return {};
    }

    Alphabet alphabet_;
    rx::Ptr root_;
};

inline bool is_expression_syntax(char c) {
    return c == '|' || c == '*' || c == '(' || c == ')' || c == '~';
}

/// Parse `|`, juxtaposition, `*`, parentheses and `~` (empty word); `()` is the
/// empty set. Whitespace is ignored. Without an alphabet, it is inferred from
/// the letters used (sorted).
inline RationalExpression parse_expression(std::string_view text,
                                           std::optional<Alphabet> alphabet = std::nullopt) {
    if (!alphabet) {
        std::string chars;
        for (char c : text)
            if (!is_expression_syntax(c) && !std::isspace(static_cast<unsigned char>(c))) chars += c;
        std::sort(chars.begin(), chars.end());
        chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
        if (chars.empty()) chars = "a";
        alphabet = Alphabet(chars);
    }
    const Alphabet& abc = *alphabet;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> InputError {
        return InputError("expression column " + std::to_string(pos + 1) + ": " + what);
    };
    std::function<rx::Ptr()> parse_union;
    std::function<rx::Ptr()> parse_atom = [&]() -> rx::Ptr {
        skip();
        if (pos >= text.size()) throw fail("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            skip();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                return rx::empty();
            }
            rx::Ptr inner = parse_union();
            skip();
            if (pos >= text.size() || text[pos] != ')') throw fail("missing ')'");
            ++pos;
            return inner;
        }
        if (c == '~') {
            ++pos;
            return rx::epsilon();
        }
        if (is_expression_syntax(c)) throw fail(std::string("unexpected '") + c + "'");
        auto s = abc.find(c);
        if (!s) throw fail(std::string("character '") + c + "' not in alphabet");
        ++pos;
        return rx::letter(*s);
    };
    auto parse_factor = [&]() -> rx::Ptr {
        rx::Ptr e = parse_atom();
        for (;;) {
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                e = rx::star(e);
            } else {
                return e;
            }
        }
    };
    auto parse_concat = [&]() -> rx::Ptr {
        std::vector<rx::Ptr> parts;
        for (;;) {
            skip();
            if (pos >= text.size() || text[pos] == '|' || text[pos] == ')') break;
            parts.push_back(parse_factor());
        }
        if (parts.empty()) throw fail("empty operand");
        return rx::cat(parts);
    };
    parse_union = [&]() -> rx::Ptr {
        std::vector<rx::Ptr> parts{parse_concat()};
        for (;;) {
            skip();
            if (pos < text.size() && text[pos] == '|') {
                ++pos;
                parts.push_back(parse_concat());
            } else {
                return rx::alt(parts);
            }
        }
    };
    rx::Ptr root = parse_union();
    skip();
    if (pos != text.size()) throw fail(std::string("unexpected '") + text[pos] + "'");
    return RationalExpression(abc, root);
}

/// Position automaton: state 0 is initial, state p >= 1 is the p-th letter
/// occurrence. It has no edge into state 0 and no epsilon transitions.
inline Automaton glushkov(const RationalExpression& e) {
    using rx::Kind;
    std::vector<Symbol> positions;
    std::vector<std::set<std::size_t>> follow;
    struct Info {
        bool nullable;
        std::vector<std::size_t> first, last;
    };
    std::function<Info(const rx::Ptr&)> walk = [&](const rx::Ptr& n) -> Info {
        switch (n->kind) {
            case Kind::empty: return {false, {}, {}};
            case Kind::epsilon: return {true, {}, {}};
            case Kind::letter: {
                positions.push_back(n->letter);
                follow.emplace_back();
                std::size_t p = positions.size();
                return {false, {p}, {p}};
            }
            case Kind::star: {
                Info in = walk(n->children[0]);
                for (std::size_t l : in.last)
                    for (std::size_t f : in.first) follow[l - 1].insert(f);
                in.nullable = true;
                return in;
            }
            case Kind::alt: {
                Info out{false, {}, {}};
                for (const auto& c : n->children) {
                    Info in = walk(c);
                    out.nullable = out.nullable || in.nullable;
                    out.first.insert(out.first.end(), in.first.begin(), in.first.end());
                    out.last.insert(out.last.end(), in.last.begin(), in.last.end());
                }
                return out;
            }
            case Kind::cat: {
                Info out{true, {}, {}};
                for (const auto& c : n->children) {
                    Info in = walk(c);
                    for (std::size_t l : out.last)
                        for (std::size_t f : in.first) follow[l - 1].insert(f);
                    if (out.nullable) out.first.insert(out.first.end(), in.first.begin(), in.first.end());
                    if (in.nullable)
                        out.last.insert(out.last.end(), in.last.begin(), in.last.end());
                    else
                        out.last = in.last;
                    out.nullable = out.nullable && in.nullable;
                }
                return out;
            }
        }
        return {false, {}, {}};
    };
    Info root = walk(e.root());
    std::vector<Edge> edges;
    for (std::size_t f : root.first) edges.push_back({0, positions[f - 1], static_cast<State>(f)});
    for (std::size_t p = 1; p <= positions.size(); ++p)
        for (std::size_t q : follow[p - 1])
            edges.push_back({static_cast<State>(p), positions[q - 1], static_cast<State>(q)});
    std::vector<State> terminal;
    if (root.nullable) terminal.push_back(0);
    for (std::size_t l : root.last) terminal.push_back(static_cast<State>(l));
    return Automaton(e.alphabet(), positions.size() + 1, std::move(edges), {0}, std::move(terminal));
}

inline Dfa minimal_dfa(const RationalExpression& e) { return minimize(determinize(glushkov(e))); }

/// Exact language equality through canonical minimal automata.
inline bool equivalent(const RationalExpression& x, const RationalExpression& y) {
    if (!(x.alphabet() == y.alphabet())) return false;
    return isomorphic(minimal_dfa(x), minimal_dfa(y));
}

/// Expression for the labels of paths from `anchor` back to `anchor` that do
/// not visit `anchor` in between. Cheapest states (in-degree times out-degree)
/// are eliminated first, ties going to the lowest index.
inline RationalExpression first_returns(const Automaton& a, State anchor) {
    if (anchor >= a.size()) throw InputError("anchor state out of range");
    const std::size_t n = a.size();
    const std::size_t source = n, sink = n + 1;
    std::map<std::pair<std::size_t, std::size_t>, rx::Ptr> r;
    auto add = [&](std::size_t p, std::size_t q, const rx::Ptr& e) {
        auto [it, inserted] = r.emplace(std::make_pair(p, q), e);
        if (!inserted) it->second = rx::alt(it->second, e);
    };
    for (const Edge& e : a.edges()) {
        std::size_t p = e.src == anchor ? source : e.src;
        std::size_t q = e.dst == anchor ? sink : e.dst;
        add(p, q, rx::letter(e.label));
    }
    std::vector<bool> alive(n + 2, true);
    alive[anchor] = false;
    for (;;) {
        std::vector<std::size_t> in(n + 2, 0), out(n + 2, 0);
        for (const auto& [key, expr] : r) {
            if (key.first == key.second) continue;
            ++out[key.first];
            ++in[key.second];
        }
        std::size_t pick = n + 2;
        std::size_t best = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!alive[k]) continue;
            std::size_t cost = in[k] * out[k];
            if (pick == n + 2 || cost < best) {
                pick = k;
                best = cost;
            }
        }
        if (pick == n + 2) break;
        alive[pick] = false;
        rx::Ptr loop = rx::epsilon();
        if (auto it = r.find({pick, pick}); it != r.end()) loop = rx::star(it->second);
        std::vector<std::pair<std::size_t, rx::Ptr>> preds, succs;
        for (const auto& [key, expr] : r) {
            if (key.second == pick && key.first != pick) preds.emplace_back(key.first, expr);
            if (key.first == pick && key.second != pick) succs.emplace_back(key.second, expr);
        }
        for (auto it = r.begin(); it != r.end();) {
            if (it->first.first == pick || it->first.second == pick)
                it = r.erase(it);
            else
                ++it;
        }
        for (const auto& [p, ep] : preds)
            for (const auto& [q, eq] : succs) add(p, q, rx::cat(std::vector<rx::Ptr>{ep, loop, eq}));
    }
    auto it = r.find({source, sink});
    return RationalExpression(a.alphabet(), it == r.end() ? rx::empty() : it->second);
}

}  // namespace codedshift
