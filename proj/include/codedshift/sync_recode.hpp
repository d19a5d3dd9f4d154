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
// Constants, synchronized shifts and the recoding of a synchronized coded
// shift by a code whose first-return automaton is unambiguous.

#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "codedshift/codes.hpp"
#include "codedshift/shifts.hpp"
#include "codedshift/unambiguity.hpp"

namespace codedshift {

/// A word w whose paths in a deterministic automaton all end in `sink`.
struct Constant {
    Word word;
    State sink = kNoState;
};

enum class SearchOrder {
    reverse_lex,  // length first, then letters tried from the last to the first
    length_lex,   // length first, then alphabetical
};

namespace detail {

inline std::vector<State> image(const Dfa& d, const std::vector<State>& set, Symbol x) {
    std::vector<State> out;
    for (State p : set)
        if (State q = d.next(p, x); q != kNoState) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<Symbol> letter_order(const Alphabet& a, SearchOrder order) {
    std::vector<Symbol> letters(a.size());
    for (Symbol x = 0; x < a.size(); ++x) letters[x] = order == SearchOrder::length_lex ? x : a.size() - 1 - x;
    return letters;
}

/// Shortest word (in the given order) taking `start` to a singleton.
inline std::optional<Constant> merging_word(const Dfa& d, const std::vector<State>& start, std::size_t max_len,
                                            SearchOrder order) {
    if (start.size() == 1) return Constant{{}, start.front()};
    auto letters = letter_order(d.alphabet(), order);
    std::map<std::vector<State>, Word> seen{{start, Word{}}};
    std::vector<std::vector<State>> level{start};
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
        std::vector<std::vector<State>> next;
        for (const auto& set : level) {
            const Word& prefix = seen.at(set);
            for (Symbol x : letters) {
                auto img = image(d, set, x);
                if (img.empty() || seen.count(img)) continue;
                Word w = prefix;
                w.push_back(x);
                if (img.size() == 1) return Constant{w, img.front()};
                seen.emplace(img, w);
                next.push_back(img);
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

}  // namespace detail

/// Shortest constant of a deterministic automaton: a word w such that the set
/// of states p.w, over all states p where it is defined, is a singleton.
/// `max_len` of 0 means 2n^2.
inline std::optional<Constant> find_constant(const Dfa& d, std::size_t max_len = 0,
                                             SearchOrder order = SearchOrder::reverse_lex) {
    if (max_len == 0) max_len = 2 * d.size() * d.size();
    std::vector<State> all(d.size());
    for (State q = 0; q < d.size(); ++q) all[q] = q;
    return detail::merging_word(d, all, max_len, order);
}

/// Subset automaton on the images I(w)u of minimal non-zero cardinality,
/// starting from the first such image met breadth-first. The result is
/// deterministic and synchronized; its states are named by their subsets.
inline Automaton fischer_subset(const Dfa& d, const Word& w) {
    std::vector<State> all(d.size());
    for (State q = 0; q < d.size(); ++q) all[q] = q;
    std::vector<State> start = all;
    for (Symbol x : w) start = detail::image(d, start, x);
    if (start.empty()) throw InputError("I(w) is empty: '" + d.alphabet().str(w) + "' labels no path");

    auto explore = [&](const std::vector<State>& from) {
        std::vector<std::vector<State>> order{from};
        std::set<std::vector<State>> seen{from};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (Symbol x = 0; x < d.alphabet().size(); ++x) {
                auto img = detail::image(d, order[i], x);
                if (!img.empty() && seen.insert(img).second) order.push_back(img);
            }
        return order;
    };
    auto images = explore(start);
    std::size_t best = images.front().size();
    std::vector<State> minimal = images.front();
    for (const auto& s : images)
        if (s.size() < best) {
            best = s.size();
            minimal = s;
        }
    auto sets = explore(minimal);
    std::map<std::vector<State>, State> index;
    std::vector<std::string> names;
    Automaton as_nfa = d.to_automaton();
    for (const auto& s : sets) {
        index.emplace(s, static_cast<State>(names.size()));
        names.push_back(subset_name(as_nfa, s));
    }
    std::vector<Edge> edges;
    for (const auto& s : sets)
        for (Symbol x = 0; x < d.alphabet().size(); ++x) {
            auto img = detail::image(d, s, x);
            if (!img.empty()) edges.push_back({index.at(s), x, index.at(img)});
        }
    return Automaton(d.alphabet(), sets.size(), std::move(edges), {0}, {0}, std::move(names));
}

/// A shift whose minimal factor automaton has a unique maximal strongly
/// connected component (no edge leaves it) admitting a merging word. On true
/// `states` is that component and `words[0]` the merging word.
inline Verdict is_synchronized_shift(const Dfa& factor_dfa, std::size_t max_len = 0) {
    Dfa d = minimize(factor_dfa);
    auto g = graph_of(d);
    auto scc = tarjan(g);
    std::vector<std::size_t> maximal;
    for (std::size_t c = 0; c < scc.members.size(); ++c)
        if (scc.successors[c].empty()) maximal.push_back(c);
    if (maximal.size() != 1) {
        Verdict v = Verdict::no(WitnessKind::state_set);
        v.detail = std::to_string(maximal.size()) + " maximal strongly connected components";
        for (std::size_t c : maximal) v.states.push_back(static_cast<State>(scc.members[c].front()));
        return v;
    }
    std::vector<State> component;
    for (std::size_t q : scc.members[maximal.front()]) component.push_back(static_cast<State>(q));
    std::sort(component.begin(), component.end());
    if (max_len == 0) max_len = 2 * d.size() * d.size();
    auto merge = detail::merging_word(d, component, max_len, SearchOrder::length_lex);
    if (!merge) {
        Verdict v = Verdict::no(WitnessKind::state_set);
        v.states = component;
        v.detail = "no merging word within length " + std::to_string(max_len);
        return v;
    }
    Verdict v = Verdict::yes("unique maximal component with a merging word");
    v.kind = WitnessKind::word;
    v.states = component;
    v.words = {merge->word};
    return v;
}

inline Verdict is_synchronized_shift(const SoficShift& x, std::size_t max_len = 0) {
    return is_synchronized_shift(x.language_dfa(), max_len);
}

/// Result of recoding a prefix code C into the first-return code C' of the
/// anchor (w, q_w) of the product automaton.
struct RecodedPresentation {
    Constant constant;
    Automaton product;          // states (u, p) reachable from the anchor; anchor initial and terminal
    State anchor = kNoState;    // index of (w, q_w) in `product`
    Automaton first_return;     // the anchor's strongly connected component
    State first_return_anchor = kNoState;
    RationalExpression code;    // C'
};

struct RecodeOptions {
    std::size_t max_constant_len = 0;  // 0: 2n^2 for n states of A(C*)
    std::size_t step_budget = 1000000;
    SearchOrder order = SearchOrder::reverse_lex;
};

inline RecodedPresentation recode_unambiguous(const RationalExpression& c, const RecodeOptions& options = {}) {
    Dfa cd = code_dfa(c);
    if (Verdict p = is_prefix_code(cd); !p)
        throw InputError("not a prefix code: '" + c.alphabet().str(p.words.at(0)) + "' is a prefix of '" +
                         c.alphabet().str(p.words.at(1)) + "'");
    Dfa star = star_min_automaton(c);
    auto constant = find_constant(star, options.max_constant_len, options.order);
    if (!constant) throw InputError("not synchronized within bound");
    const Word& w = constant->word;
    const std::size_t n = w.size();
    const Alphabet& alphabet = star.alphabet();

    std::map<std::pair<Word, State>, State> index;
    std::vector<std::pair<Word, State>> states;
    std::vector<Edge> edges;
    std::deque<State> queue;
    auto visit = [&](const Word& u, State p) {
        auto [it, inserted] = index.emplace(std::make_pair(u, p), static_cast<State>(states.size()));
        if (inserted) {
            if (states.size() >= options.step_budget) throw InputError("step budget exhausted");
            states.emplace_back(u, p);
            queue.push_back(it->second);
        }
        return it->second;
    };
    visit(w, constant->sink);
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        auto [u, p] = states[s];
        for (Symbol x = 0; x < alphabet.size(); ++x) {
            State q = star.next(p, x);
            if (q == kNoState) continue;
            Word v = u;
            v.push_back(x);
            v.erase(v.begin());
            edges.push_back({s, x, visit(v, q)});
        }
    }
    for (const auto& [u, p] : states)
        if (u == w && p != constant->sink)
            throw InvariantError("anchor is not unique: (" + alphabet.str(w) + "," + std::to_string(p) +
                                 ") is reachable");
    std::vector<std::string> names;
    for (const auto& [u, p] : states) names.push_back((n == 0 ? std::string("~") : alphabet.str(u)) + "," + std::to_string(p));

    RecodedPresentation out;
    out.constant = *constant;
    out.anchor = 0;
    out.product = Automaton(alphabet, states.size(), std::move(edges), {0}, {0}, std::move(names));

    auto scc = tarjan(graph_of(out.product));
    std::size_t c0 = scc.component[0];
    if (scc.trivial[c0]) throw InvariantError("anchor lies in a trivial component");
    std::vector<bool> keep(states.size(), false);
    for (std::size_t q : scc.members[c0]) keep[q] = true;
    std::vector<State> old_of_new;
    Automaton part = restrict_to(out.product, keep, &old_of_new);
    State anchor = kNoState;
    for (State q = 0; q < old_of_new.size(); ++q)
        if (old_of_new[q] == 0) anchor = q;
    out.first_return = Automaton(alphabet, part.size(), part.edges(), {anchor}, {anchor}, part.names());
    out.first_return_anchor = anchor;
    out.code = first_returns(out.first_return, anchor);

    if (Verdict su = is_strongly_unambiguous_recurrent(out.first_return, anchor); !su)
        throw InvariantError("first-return automaton is ambiguous on '" + alphabet.str(su.paths.label) + "'");
    return out;
}

inline RecodedPresentation recode_unambiguous(const Code& c, const RecodeOptions& options = {}) {
    return recode_unambiguous(c.expression(), options);
}

}  // namespace codedshift
