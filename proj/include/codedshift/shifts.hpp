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
// Shift spaces presented by finite automata: sofic shifts, shifts of finite
// type from forbidden words, languages, irreducibility and sliding block maps.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "codedshift/algorithms.hpp"
#include "codedshift/verdict.hpp"

namespace codedshift {

/// A shift space given by the labels of bi-infinite paths of an automaton.
/// The presentation is trimmed to its essential part and every state is
/// initial and terminal.
class SoficShift {
public:
    explicit SoficShift(const Automaton& presentation) {
        Automaton ess = essential_part(presentation);
        if (ess.size() == 0) throw InputError("empty shift: no bi-infinite path");
        presentation_ = factor_automaton(ess);
    }

    const Automaton& presentation() const { return presentation_; }
    const Alphabet& alphabet() const { return presentation_.alphabet(); }

    /// Deterministic automaton of the factor language (all states accepting).
    Dfa language_dfa() const { return minimize(determinize(presentation_)); }

    bool contains(const Word& w) const { return presentation_.has_path_labeled(w); }

private:
    Automaton presentation_;
};

/// Words of length exactly n in the language of the shift.
inline WordSet language(const SoficShift& x, std::size_t n) { return path_labels(x.presentation(), n); }

/// Shift of finite type avoiding every word of `forbidden`. States are the
/// allowed words of length max|w| - 1.
inline SoficShift sft_from_forbidden(const std::vector<Word>& forbidden, const Alphabet& alphabet) {
    if (forbidden.empty()) throw InputError("the forbidden set must not be empty");
    std::size_t k = 0;
    for (const Word& w : forbidden) {
        if (w.empty()) throw InputError("the empty word cannot be forbidden");
        k = std::max(k, w.size());
    }
    auto allowed = [&](const Word& w) {
        for (const Word& f : forbidden)
            if (is_factor(f, w)) return false;
        return true;
    };
    std::vector<Word> windows{Word{}};
    for (std::size_t len = 0; len + 1 < k; ++len) {
        std::vector<Word> next;
        for (const Word& w : windows)
            for (Symbol x = 0; x < alphabet.size(); ++x) {
                Word v = w;
                v.push_back(x);
                if (allowed(v)) next.push_back(v);
            }
        windows = std::move(next);
    }
    std::map<Word, State> index;
    std::vector<std::string> names;
    for (const Word& w : windows) {
        index.emplace(w, static_cast<State>(names.size()));
        names.push_back(w.empty() ? "~" : alphabet.str(w));
    }
    std::vector<Edge> edges;
    for (const Word& w : windows)
        for (Symbol x = 0; x < alphabet.size(); ++x) {
            Word full = w;
            full.push_back(x);
            if (!allowed(full)) continue;
            Word next = slice(full, 1, full.size());
            auto it = index.find(next);
            if (it != index.end()) edges.push_back({index.at(w), x, it->second});
        }
    return SoficShift(Automaton::all_states(alphabet, windows.size(), std::move(edges), std::move(names)));
}

/// Irreducibility: some strongly connected component of the presentation
/// presents the whole shift. Factor languages are compared exactly through
/// their minimal automata. On true, `states` lists the component.
inline Verdict is_irreducible(const SoficShift& x) {
    const Automaton& a = x.presentation();
    auto scc = tarjan(graph_of(a));
    Dfa whole = x.language_dfa();
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
        if (scc.trivial[c]) continue;
        std::vector<bool> keep(a.size(), false);
        for (std::size_t q : scc.members[c]) keep[q] = true;
        Automaton part = factor_automaton(restrict_to(a, keep));
        if (isomorphic(minimize(determinize(part)), whole)) {
            Verdict v = Verdict::yes(scc.members.size() == 1 ? "strongly connected presentation"
                                                             : "component presents the shift");
            v.kind = WitnessKind::state_set;
            for (std::size_t q : scc.members[c]) v.states.push_back(static_cast<State>(q));
            return v;
        }
    }
    Verdict v = Verdict::no(WitnessKind::state_set);
    v.detail = "no strongly connected component presents the whole shift";
    v.detail += " (" + std::to_string(scc.members.size()) + " components)";
    return v;
}

/// Sliding block map with memory `left` and anticipation `right`; the table
/// is indexed by words of length left + right + 1.
struct BlockMap {
    std::size_t left = 0;
    std::size_t right = 0;
    Alphabet target;
    std::map<Word, Symbol> table;

    std::size_t window() const { return left + right + 1; }

    Symbol apply(const Word& block) const {
        auto it = table.find(block);
        if (it == table.end()) throw InputError("block map has no entry for a block");
        return it->second;
    }
};

/// Image of a word under the sliding map (length |w| - window + 1).
inline Word slide(const BlockMap& f, const Word& w) {
    Word out;
    for (std::size_t i = 0; i + f.window() <= w.size(); ++i) out.push_back(f.apply(slice(w, i, i + f.window())));
    return out;
}

/// Factor shift Y = f(X). States are pairs (p, u) where u, of length
/// window - 1, labels a path ending at p; each edge p -a-> q of X gives
/// (p, bu) -c-> (q, ua) with c = f(bua).
inline SoficShift apply_block_map(const SoficShift& x, const BlockMap& f) {
    const Automaton& a = x.presentation();
    const std::size_t len = f.window() - 1;
    // Words of length `len` labeling paths that end at each state.
    std::vector<std::set<Word>> ending(a.size());
    for (State q = 0; q < a.size(); ++q) ending[q].insert(Word{});
    for (std::size_t step = 0; step < len; ++step) {
        std::vector<std::set<Word>> next(a.size());
        for (const Edge& e : a.edges())
            for (const Word& u : ending[e.src]) {
                Word v = u;
                v.push_back(e.label);
                next[e.dst].insert(v);
            }
        ending = std::move(next);
    }
    std::map<std::pair<State, Word>, State> index;
    std::vector<std::string> names;
    for (State q = 0; q < a.size(); ++q)
        for (const Word& u : ending[q]) {
            index.emplace(std::make_pair(q, u), static_cast<State>(names.size()));
            names.push_back(a.name(q) + "," + (u.empty() ? std::string("~") : a.alphabet().str(u)));
        }
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (const Edge& e : a.edges())
        for (const Word& u : ending[e.src]) {
            Word block = u;
            block.push_back(e.label);
            auto it = f.table.find(block);
            if (it == f.table.end())
                throw InputError("block map has no entry for '" + a.alphabet().str(block) + "'");
            Word v = slice(block, 1, block.size());
            Edge out{index.at({e.src, u}), it->second, index.at({e.dst, v})};
            if (seen.insert(out).second) edges.push_back(out);
        }
    const std::size_t n = names.size();
    return SoficShift(Automaton::all_states(f.target, n, std::move(edges), std::move(names)));
}

/// De Bruijn automaton on the (k-1)-windows of a sample: one edge per sampled
/// word of length k. Every shift whose k-blocks lie in the sample is included.
inline SoficShift sofic_overapprox(const WordSet& sample, std::size_t k, const Alphabet& alphabet) {
    if (k == 0) throw InputError("window length must be at least 1");
    for (const Word& w : sample) {
        if (w.size() > k) continue;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j <= w.size(); ++j)
                if (!sample.count(slice(w, i, j)))
                    throw InputError("sample is not factor-closed: '" + alphabet.str(slice(w, i, j)) +
                                     "' is missing");
    }
    std::map<Word, State> index;
    std::vector<std::string> names;
    auto state = [&](const Word& w) {
        auto [it, inserted] = index.emplace(w, static_cast<State>(names.size()));
        if (inserted) names.push_back(w.empty() ? std::string("~") : alphabet.str(w));
        return it->second;
    };
    std::vector<Edge> edges;
    for (const Word& w : sample) {
        if (w.size() != k) continue;
        State from = state(slice(w, 0, k - 1));
        State to = state(slice(w, 1, k));
        edges.push_back({from, w.back(), to});
    }
    if (edges.empty()) throw InputError("sample has no word of the window length");
    const std::size_t n = names.size();
    return SoficShift(Automaton::all_states(alphabet, n, std::move(edges), std::move(names)));
}

}  // namespace codedshift
