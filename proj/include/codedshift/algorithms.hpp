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
// Graph algebra on automata: subset construction, minimization, reversal,
// strongly connected components, squares, trimming and isomorphism.

#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "codedshift/automaton.hpp"
#include "codedshift/graph.hpp"

namespace codedshift {

inline LabeledGraph graph_of(const Automaton& a) {
    LabeledGraph g;
    g.out.resize(a.size());
    for (const Edge& e : a.edges()) g.out[e.src].emplace_back(e.label, e.dst);
    g.sort_edges();
    return g;
}

inline LabeledGraph graph_of(const Dfa& d) {
    LabeledGraph g;
    g.out.resize(d.size());
    for (State q = 0; q < d.size(); ++q)
        for (Symbol a = 0; a < d.alphabet().size(); ++a)
            if (State r = d.next(q, a); r != kNoState) g.out[q].emplace_back(a, r);
    return g;
}

inline std::string subset_name(const Automaton& a, const std::vector<State>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += a.name(set[i]);
    }
    return out + "}";
}

/// Subset construction from an explicit start set; only reachable non-empty
/// subsets become states. Terminal iff the subset meets the terminal set.
inline Dfa determinize_from(const Automaton& a, std::vector<State> start) {
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    if (start.empty()) throw InputError("subset construction needs a non-empty start set");
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    std::deque<State> queue;
    index.emplace(start, 0);
    subsets.push_back(start);
    queue.push_back(0);
    std::vector<std::tuple<State, Symbol, State>> transitions;
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
            auto next = a.step(subsets[s], x);
            if (next.empty()) continue;
            auto [it, inserted] = index.emplace(next, static_cast<State>(subsets.size()));
            if (inserted) {
                subsets.push_back(next);
                queue.push_back(it->second);
            }
            transitions.emplace_back(s, x, it->second);
        }
    }
    std::vector<bool> terminal(subsets.size(), false);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (State q : subsets[i])
            if (a.is_terminal(q)) terminal[i] = true;
        names.push_back(subset_name(a, subsets[i]));
    }
    Dfa d(a.alphabet(), subsets.size(), 0, std::move(terminal), std::move(names));
    for (auto [s, x, t] : transitions) d.set(s, x, t);
    return d;
}

inline Dfa determinize(const Automaton& a) {
    if (a.initial().empty()) throw InputError("determinize needs at least one initial state");
    return determinize_from(a, a.initial());
}

/// Renumber the accessible part in breadth-first order (letters in alphabet
/// order). Two Dfas are isomorphic iff their canonical forms are equal.
inline Dfa canonical(const Dfa& d) {
    std::vector<State> order{d.initial()};
    std::vector<State> renum(d.size(), kNoState);
    renum[d.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Symbol x = 0; x < d.alphabet().size(); ++x)
            if (State r = d.next(order[i], x); r != kNoState && renum[r] == kNoState) {
                renum[r] = static_cast<State>(order.size());
                order.push_back(r);
            }
    std::vector<bool> terminal(order.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order.size(); ++i) {
        terminal[i] = d.is_terminal(order[i]);
        if (!d.names().empty()) names.push_back(d.name(order[i]));
    }
    Dfa out(d.alphabet(), order.size(), 0, std::move(terminal), std::move(names));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Symbol x = 0; x < d.alphabet().size(); ++x)
            if (State r = d.next(order[i], x); r != kNoState)
                out.set(static_cast<State>(i), x, renum[r]);
    return out;
}

inline bool isomorphic(const Dfa& lhs, const Dfa& rhs) {
    return lhs.alphabet().size() == rhs.alphabet().size() && canonical(lhs) == canonical(rhs);
}

/// Minimal automaton: states are the distinct non-empty residuals u^{-1}L.
/// States with an empty residual are dropped rather than merged into a sink.
inline Dfa minimize(const Dfa& d) {
    const std::size_t k = d.alphabet().size();
    auto g = graph_of(d);
    std::vector<bool> start(d.size(), false);
    start[d.initial()] = true;
    auto accessible = reachable_from(g, start);
    std::vector<bool> finals(d.size());
    for (State q = 0; q < d.size(); ++q) finals[q] = d.is_terminal(q);
    auto coaccessible = reachable_from(g.reversed(), finals);
    std::vector<bool> live(d.size());
    for (State q = 0; q < d.size(); ++q) live[q] = accessible[q] && coaccessible[q];
    if (!live[d.initial()]) return Dfa(d.alphabet(), 1, 0, {false});

    auto target = [&](State q, Symbol x) {
        State r = d.next(q, x);
        return (r != kNoState && live[r]) ? r : kNoState;
    };
    // Moore refinement; block ids are renumbered by signature each round.
    std::vector<std::size_t> block(d.size(), 0);
    for (State q = 0; q < d.size(); ++q) block[q] = d.is_terminal(q) ? 1 : 0;
    std::size_t num_blocks = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> signatures;
        std::vector<std::size_t> next(d.size(), 0);
        for (State q = 0; q < d.size(); ++q) {
            if (!live[q]) continue;
            std::vector<std::size_t> sig{block[q]};
            for (Symbol x = 0; x < k; ++x) {
                State r = target(q, x);
                sig.push_back(r == kNoState ? static_cast<std::size_t>(-1) : block[r]);
            }
            auto [it, inserted] = signatures.emplace(std::move(sig), signatures.size());
            next[q] = it->second;
        }
        bool stable = signatures.size() == num_blocks;
        num_blocks = signatures.size();
        block = std::move(next);
        if (stable) break;
    }
    std::vector<bool> terminal(num_blocks, false);
    for (State q = 0; q < d.size(); ++q)
        if (live[q] && d.is_terminal(q)) terminal[block[q]] = true;
    Dfa quotient(d.alphabet(), num_blocks, static_cast<State>(block[d.initial()]), terminal);
    for (State q = 0; q < d.size(); ++q) {
        if (!live[q]) continue;
        for (Symbol x = 0; x < k; ++x)
            if (State r = target(q, x); r != kNoState)
                quotient.set(static_cast<State>(block[q]), x, static_cast<State>(block[r]));
    }
    return canonical(quotient);
}

inline Automaton reverse(const Automaton& a) {
    std::vector<Edge> edges;
    edges.reserve(a.edges().size());
    for (const Edge& e : a.edges()) edges.push_back({e.dst, e.label, e.src});
    return Automaton(a.alphabet(), a.size(), std::move(edges), a.terminal(), a.initial(), a.names());
}

inline SccDecomposition scc(const Automaton& a) { return tarjan(graph_of(a)); }

/// At most one edge per (state, letter). Initial states are not constrained,
/// as for shift presentations where every state is initial.
inline bool is_deterministic(const Automaton& a) {
    for (State q = 0; q < a.size(); ++q) {
        std::vector<Symbol> labels;
        for (std::size_t i : a.out(q)) labels.push_back(a.edge(i).label);
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
    }
    return true;
}

inline bool is_codeterministic(const Automaton& a) { return is_deterministic(reverse(a)); }

inline bool is_reversible(const Automaton& a) {
    return is_deterministic(a) && is_codeterministic(a);
}

/// Induced sub-automaton on the states where `keep` holds, renumbered in
/// increasing order. Names are carried over (old indices if unnamed).
inline Automaton restrict_to(const Automaton& a, const std::vector<bool>& keep,
                             std::vector<State>* old_of_new = nullptr) {
    std::vector<State> renum(a.size(), kNoState);
    std::vector<State> olds;
    std::vector<std::string> names;
    for (State q = 0; q < a.size(); ++q)
        if (keep[q]) {
            renum[q] = static_cast<State>(olds.size());
            olds.push_back(q);
            names.push_back(a.name(q));
        }
    std::vector<Edge> edges;
    for (const Edge& e : a.edges())
        if (keep[e.src] && keep[e.dst]) edges.push_back({renum[e.src], e.label, renum[e.dst]});
    std::vector<State> initial, terminal;
    for (State q : a.initial())
        if (keep[q]) initial.push_back(renum[q]);
    for (State q : a.terminal())
        if (keep[q]) terminal.push_back(renum[q]);
    if (old_of_new) *old_of_new = olds;
    return Automaton(a.alphabet(), olds.size(), std::move(edges), std::move(initial),
                     std::move(terminal), std::move(names));
}

/// Keep states accessible from I and co-accessible to T.
inline Automaton trim(const Automaton& a) {
    auto g = graph_of(a);
    std::vector<bool> init(a.size(), false), fin(a.size(), false);
    for (State q : a.initial()) init[q] = true;
    for (State q : a.terminal()) fin[q] = true;
    auto fwd = reachable_from(g, init);
    auto bwd = reachable_from(g.reversed(), fin);
    std::vector<bool> keep(a.size());
    for (State q = 0; q < a.size(); ++q) keep[q] = fwd[q] && bwd[q];
    return restrict_to(a, keep);
}

/// Keep the states lying on some bi-infinite path.
inline Automaton essential_part(const Automaton& a, std::vector<State>* old_of_new = nullptr) {
    return restrict_to(a, biinfinite_vertices(graph_of(a)), old_of_new);
}

struct Square {
    Automaton automaton;
    /// (p, q) of each square state.
    std::vector<std::pair<State, State>> pairs;
};

/// A x A on all pairs; state (p, q) has index p * |Q| + q.
inline Square square(const Automaton& a) {
    const std::size_t n = a.size();
    Square sq;
    std::vector<std::string> names;
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            sq.pairs.emplace_back(p, q);
            names.push_back(a.name(p) + "," + a.name(q));
        }
    std::vector<Edge> edges;
    for (const Edge& e : a.edges())
        for (const Edge& f : a.edges())
            if (e.label == f.label)
                edges.push_back({static_cast<State>(e.src * n + f.src), e.label,
                                 static_cast<State>(e.dst * n + f.dst)});
    sq.automaton = Automaton(a.alphabet(), n * n, std::move(edges), {}, {}, std::move(names));
    return sq;
}

/// Non-diagonal part of A x A: states (p, q) with p != q in row-major order.
inline Square square_nondiagonal(const Automaton& a) {
    const std::size_t n = a.size();
    Square sq;
    std::vector<State> index(n * n, kNoState);
    std::vector<std::string> names;
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            if (p != q) {
                index[p * n + q] = static_cast<State>(sq.pairs.size());
                sq.pairs.emplace_back(p, q);
                names.push_back(a.name(p) + "," + a.name(q));
            }
    std::vector<Edge> edges;
    for (const Edge& e : a.edges())
        for (const Edge& f : a.edges())
            if (e.label == f.label && e.src != f.src && e.dst != f.dst)
                edges.push_back({index[e.src * n + f.src], e.label, index[e.dst * n + f.dst]});
    sq.automaton = Automaton(a.alphabet(), sq.pairs.size(), std::move(edges), {}, {}, std::move(names));
    return sq;
}

/// Brute-force isomorphism for small automata (labels, initial and terminal
/// sets preserved). Exponential in the worst case; meant for tests and checks.
inline bool isomorphic(const Automaton& x, const Automaton& y) {
    const std::size_t n = x.size();
    if (n != y.size() || x.edges().size() != y.edges().size() ||
        x.alphabet().size() != y.alphabet().size() || x.initial().size() != y.initial().size() ||
        x.terminal().size() != y.terminal().size())
        return false;
    auto signature = [](const Automaton& a, State q) {
        std::vector<std::pair<int, Symbol>> sig;
        for (std::size_t i : a.out(q)) sig.emplace_back(0, a.edge(i).label);
        for (std::size_t i : a.in(q)) sig.emplace_back(1, a.edge(i).label);
        sig.emplace_back(2, a.is_initial(q) ? 1 : 0);
        sig.emplace_back(3, a.is_terminal(q) ? 1 : 0);
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    std::vector<std::vector<std::pair<int, Symbol>>> sx(n), sy(n);
    for (State q = 0; q < n; ++q) {
        sx[q] = signature(x, q);
        sy[q] = signature(y, q);
    }
    std::vector<State> map(n, kNoState);
    std::vector<bool> used(n, false);
    std::function<bool(State)> assign = [&](State q) -> bool {
        if (q == n) return true;
        for (State r = 0; r < n; ++r) {
            if (used[r] || sx[q] != sy[r]) continue;
            bool ok = true;
            for (std::size_t i : x.out(q)) {
                const Edge& e = x.edge(i);
                if (e.dst <= q && e.dst != q && !y.has_edge(r, e.label, map[e.dst])) ok = false;
                if (e.dst == q && !y.has_edge(r, e.label, r)) ok = false;
            }
            for (std::size_t i : x.in(q)) {
                const Edge& e = x.edge(i);
                if (e.src < q && !y.has_edge(map[e.src], e.label, r)) ok = false;
            }
            if (!ok) continue;
            map[q] = r;
            used[r] = true;
            if (assign(q + 1)) return true;
            used[r] = false;
            map[q] = kNoState;
        }
        return false;
    };
    return assign(0);
}

/// Labels of all paths of length exactly `n` starting anywhere.
inline WordSet path_labels(const Automaton& a, std::size_t n) {
    WordSet out;
    std::vector<State> all(a.size());
    std::iota(all.begin(), all.end(), State{0});
    if (all.empty()) return out;
    Word w;
    std::function<void(const std::vector<State>&)> walk = [&](const std::vector<State>& set) {
        if (w.size() == n) {
            out.insert(w);
            return;
        }
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
            auto next = a.step(set, x);
            if (next.empty()) continue;
            w.push_back(x);
            walk(next);
            w.pop_back();
        }
    };
    walk(all);
    return out;
}

/// Labels of all paths of length at most `n` starting anywhere.
inline WordSet path_labels_upto(const Automaton& a, std::size_t n) {
    WordSet out;
    for (std::size_t k = 0; k <= n; ++k) {
        auto level = path_labels(a, k);
        out.insert(level.begin(), level.end());
    }
    return out;
}

/// Words of length at most `n` accepted by `a`.
inline WordSet accepted_words(const Automaton& a, std::size_t n) {
    WordSet out;
    Word w;
    std::function<void(const std::vector<State>&)> walk = [&](const std::vector<State>& set) {
        for (State q : set)
            if (a.is_terminal(q)) {
                out.insert(w);
                break;
            }
        if (w.size() == n) return;
        for (Symbol x = 0; x < a.alphabet().size(); ++x) {
            auto next = a.step(set, x);
            if (next.empty()) continue;
            w.push_back(x);
            walk(next);
            w.pop_back();
        }
    };
    std::vector<State> init = a.initial();
    if (!init.empty()) walk(init);
    return out;
}

/// Automaton recognizing the labels of all finite paths (all states initial and terminal).
inline Automaton factor_automaton(const Automaton& a) {
    return Automaton::all_states(a.alphabet(), a.size(), a.edges(), a.names());
}

}  // namespace codedshift
