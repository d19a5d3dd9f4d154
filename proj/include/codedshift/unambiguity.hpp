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
// Path unambiguity, strong (bi-infinite) unambiguity and unambiguity
// relative to a subshift of the path shift, all decided on product graphs.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "codedshift/algorithms.hpp"
#include "codedshift/verdict.hpp"

namespace codedshift {

namespace detail {

inline PathPair split_pairs(const Square& sq, const GraphPath& path,
                            const std::vector<std::pair<State, State>>& start_pairs = {}) {
    PathPair out;
    out.label = path.labels;
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        std::size_t v = path.vertices[i];
        auto [p, q] = v < sq.pairs.size() ? sq.pairs[v] : start_pairs.at(v - sq.pairs.size());
        out.first.push_back(p);
        out.second.push_back(q);
    }
    return out;
}

/// Shortest path leaving the diagonal from a diagonal vertex in `from` and
/// returning to a diagonal vertex in `to`, through non-diagonal vertices only.
inline std::optional<PathPair> diagonal_excursion(const Automaton& a, const Square& sq,
                                                  const LabeledGraph& g,
                                                  const std::vector<bool>& from,
                                                  const std::vector<bool>& to) {
    const std::size_t n = a.size(), m = sq.pairs.size();
    LabeledGraph h;
    h.out.resize(m + n);
    std::vector<std::pair<State, State>> starts;
    std::vector<std::size_t> sources;
    auto diagonal = [&](std::size_t v) { return v < m && sq.pairs[v].first == sq.pairs[v].second; };
    for (std::size_t v = 0; v < m; ++v)
        if (!diagonal(v)) h.out[v] = g.out[v];
    for (State p = 0; p < n; ++p) {
        starts.emplace_back(p, p);
        std::size_t d = static_cast<std::size_t>(p) * n + p;
        if (!from[d]) continue;
        for (auto [label, w] : g.out[d])
            if (!diagonal(w)) h.out[m + p].emplace_back(label, w);
        sources.push_back(m + p);
    }
    auto path = shortest_path(
        h, sources, [&](std::size_t v) { return diagonal(v) && to[v]; },
        [](std::size_t, std::size_t) { return true; }, false);
    if (!path) return std::nullopt;
    return split_pairs(sq, *path, starts);
}

inline LabeledGraph induced(const LabeledGraph& g, const std::vector<bool>& keep) {
    LabeledGraph h;
    h.out.resize(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!keep[v]) continue;
        for (auto [label, w] : g.out[v])
            if (keep[w]) h.out[v].emplace_back(label, w);
    }
    return h;
}

}  // namespace detail

/// At most one path per (label, source, target). Decided on A x A: a
/// non-diagonal vertex between two diagonal vertices is an ambiguity.
inline Verdict is_unambiguous(const Automaton& a) {
    Square sq = square(a);
    auto g = graph_of(sq.automaton);
    std::vector<bool> all(sq.pairs.size(), true);
    auto witness = detail::diagonal_excursion(a, sq, g, all, all);
    if (!witness) return Verdict::yes();
    Verdict v = Verdict::no(WitnessKind::two_finite_paths);
    v.paths = std::move(*witness);
    v.words = {v.paths.label};
    return v;
}

/// At most one bi-infinite path per bi-infinite label: no bi-infinite path of
/// A x A passes through a non-diagonal vertex. For unambiguous automata this is
/// the same as all strongly connected components of the non-diagonal part
/// being trivial.
inline Verdict is_strongly_unambiguous(const Automaton& a) {
    Square sq = square(a);
    auto g = graph_of(sq.automaton);
    auto bi = biinfinite_vertices(g);
    std::vector<bool> nondiagonal(sq.pairs.size());
    bool ambiguous = false;
    for (std::size_t v = 0; v < sq.pairs.size(); ++v) {
        nondiagonal[v] = sq.pairs[v].first != sq.pairs[v].second;
        if (nondiagonal[v] && bi[v]) ambiguous = true;
    }
    if (!ambiguous) return Verdict::yes();
    auto h = detail::induced(g, nondiagonal);
    auto scc = tarjan(h);
    if (auto cycle = shortest_cycle(h, scc, [&](std::size_t v) { return nondiagonal[v]; })) {
        Verdict v = Verdict::no(WitnessKind::pair_cycle);
        v.paths = detail::split_pairs(sq, *cycle);
        v.words = {v.paths.label};
        return v;
    }
    auto witness = detail::diagonal_excursion(a, sq, g, bi, bi);
    ensure(witness.has_value(), "bi-infinite non-diagonal vertex without a diagonal excursion");
    Verdict v = Verdict::no(WitnessKind::two_finite_paths);
    v.paths = std::move(*witness);
    v.words = {v.paths.label};
    v.detail = "both ends lie on bi-infinite diagonal paths";
    return v;
}

/// Shortest equally labeled pair of distinct cycles among the states selected
/// by `mask`, built without materializing the full square. Suited to large
/// sparse automata such as window extractions.
inline std::optional<PathPair> nondiagonal_cycle(const Automaton& a, const std::vector<bool>& mask) {
    auto base = graph_of(a);
    auto scc = tarjan(base);
    std::vector<State> members;
    for (State q = 0; q < a.size(); ++q)
        if (mask[q] && !scc.trivial[scc.component[q]]) members.push_back(q);
    std::unordered_map<std::uint64_t, std::size_t> index;
    std::vector<std::pair<State, State>> pairs;
    auto key = [](State p, State q) { return (static_cast<std::uint64_t>(p) << 32) | q; };
    for (State p : members)
        for (State q : members)
            if (p != q) {
                index.emplace(key(p, q), pairs.size());
                pairs.emplace_back(p, q);
            }
    LabeledGraph g;
    g.out.resize(pairs.size());
    for (std::size_t v = 0; v < pairs.size(); ++v) {
        auto [p, q] = pairs[v];
        for (std::size_t i : a.out(p))
            for (std::size_t j : a.out(q)) {
                const Edge& e = a.edge(i);
                const Edge& f = a.edge(j);
                if (e.label != f.label) continue;
                auto it = index.find(key(e.dst, f.dst));
                if (it != index.end()) g.out[v].emplace_back(e.label, it->second);
            }
    }
    g.sort_edges();
    auto pscc = tarjan(g);
    auto cycle = shortest_cycle(g, pscc, [](std::size_t) { return true; });
    if (!cycle) return std::nullopt;
    PathPair out;
    out.label = cycle->labels;
    for (std::size_t v : cycle->vertices) {
        out.first.push_back(pairs[v].first);
        out.second.push_back(pairs[v].second);
    }
    return out;
}

/// Strong unambiguity restricted to bi-infinite paths that visit `anchor`
/// infinitely often in both directions. Two such paths with the same label are
/// two factorizations into first returns to `anchor`.
inline Verdict is_strongly_unambiguous_recurrent(const Automaton& a, State anchor) {
    if (anchor >= a.size()) throw InputError("anchor state out of range");
    Square sq = square(a);
    auto g = graph_of(sq.automaton);
    auto scc = tarjan(g);
    const std::size_t k = scc.members.size();
    std::vector<bool> left(k, false), right(k, false);
    for (std::size_t v = 0; v < sq.pairs.size(); ++v) {
        std::size_t c = scc.component[v];
        if (scc.trivial[c]) continue;
        if (sq.pairs[v].first == anchor) left[c] = true;
        if (sq.pairs[v].second == anchor) right[c] = true;
    }
    std::vector<bool> good(sq.pairs.size(), false);
    for (std::size_t v = 0; v < sq.pairs.size(); ++v) {
        std::size_t c = scc.component[v];
        good[v] = left[c] && right[c];
    }
    auto forward = reachable_from(g, good);
    auto backward = reachable_from(g.reversed(), good);
    for (std::size_t v = 0; v < sq.pairs.size(); ++v) {
        if (sq.pairs[v].first == sq.pairs[v].second || !forward[v] || !backward[v]) continue;
        std::vector<std::size_t> sources;
        for (std::size_t s = 0; s < good.size(); ++s)
            if (good[s]) sources.push_back(s);
        auto all = [](std::size_t, std::size_t) { return true; };
        auto in = shortest_path(g, sources, [&](std::size_t w) { return w == v; }, all);
        auto out = shortest_path(g, {v}, [&](std::size_t w) { return good[w]; }, all);
        ensure(in && out, "recurrent ambiguity without connecting paths");
        GraphPath joined = *in;
        joined.labels.insert(joined.labels.end(), out->labels.begin(), out->labels.end());
        joined.vertices.insert(joined.vertices.end(), out->vertices.begin() + 1, out->vertices.end());
        Verdict verdict = Verdict::no(WitnessKind::two_finite_paths);
        verdict.paths = detail::split_pairs(sq, joined);
        verdict.words = {verdict.paths.label};
        verdict.detail = "both ends lie in anchor-recurrent components of the square";
        return verdict;
    }
    return Verdict::yes();
}

/// Unambiguity of `a` on the subshift X of its path shift recognized by `b`,
/// whose letters are the edge indices of `a`. Builds the graph on 4-tuples
/// (p, q, r, s) with an edge for each pair of b-edges p -e-> p', q -f-> q'
/// where e: r -> r' and f: s -> s' carry the same label in `a`.
inline Verdict unambiguous_on_sofic(const Automaton& a, const Automaton& b) {
    if (b.alphabet().size() != a.edges().size())
        throw InputError("alphabet mismatch: the second automaton must be labeled by the " +
                         std::to_string(a.edges().size()) + " edges of the first");
    std::map<std::array<State, 4>, std::size_t> index;
    std::vector<std::array<State, 4>> tuples;
    auto vertex = [&](const std::array<State, 4>& t) {
        auto [it, inserted] = index.emplace(t, tuples.size());
        if (inserted) tuples.push_back(t);
        return it->second;
    };
    std::vector<std::tuple<std::size_t, Symbol, std::size_t>> arcs;
    for (const Edge& eb : b.edges())
        for (const Edge& fb : b.edges()) {
            const Edge& e = a.edge(eb.label);
            const Edge& f = a.edge(fb.label);
            if (e.label != f.label) continue;
            std::size_t from = vertex({eb.src, fb.src, e.src, f.src});
            std::size_t to = vertex({eb.dst, fb.dst, e.dst, f.dst});
            arcs.emplace_back(from, e.label, to);
        }
    LabeledGraph g;
    g.out.resize(tuples.size());
    for (auto [from, label, to] : arcs) g.out[from].emplace_back(label, to);
    g.sort_edges();
    auto bi = biinfinite_vertices(g);
    std::vector<bool> split(tuples.size());
    bool ambiguous = false;
    for (std::size_t v = 0; v < tuples.size(); ++v) {
        split[v] = tuples[v][2] != tuples[v][3];
        if (split[v] && bi[v]) ambiguous = true;
    }
    if (!ambiguous) return Verdict::yes();

    auto to_pair = [&](const GraphPath& path) {
        PathPair out;
        out.label = path.labels;
        for (std::size_t v : path.vertices) {
            out.first.push_back(tuples[v][2]);
            out.second.push_back(tuples[v][3]);
        }
        return out;
    };
    auto describe = [&](const GraphPath& path) {
        std::string s;
        for (std::size_t i = 0; i < path.vertices.size(); ++i) {
            const auto& t = tuples[path.vertices[i]];
            if (i) s += " ";
            s += "(" + b.name(t[0]) + "," + b.name(t[1]) + "," + a.name(t[2]) + "," + a.name(t[3]) + ")";
        }
        return s;
    };
    auto h = detail::induced(g, split);
    auto scc = tarjan(h);
    if (auto cycle = shortest_cycle(h, scc, [&](std::size_t v) { return split[v]; })) {
        Verdict v = Verdict::no(WitnessKind::relative_pair_path);
        v.paths = to_pair(*cycle);
        v.words = {v.paths.label};
        v.detail = "cycle " + describe(*cycle);
        return v;
    }
    std::vector<std::size_t> sources;
    for (std::size_t v = 0; v < tuples.size(); ++v)
        if (!split[v] && bi[v]) sources.push_back(v);
    auto path = shortest_path(
        g, sources, [&](std::size_t v) { return !split[v] && bi[v]; },
        [&](std::size_t from, std::size_t to) { return split[from] || split[to]; }, false);
    ensure(path.has_value(), "relative ambiguity without a witness path");
    Verdict v = Verdict::no(WitnessKind::relative_pair_path);
    v.paths = to_pair(*path);
    v.words = {v.paths.label};
    v.detail = "path " + describe(*path);
    return v;
}

/// Relabel a strongly unambiguous automaton over an edge alphabet by
/// `labeling` and test the result for strong unambiguity.
inline Verdict unambiguous_on_sft_relabel(const Automaton& b, const std::vector<Symbol>& labeling,
                                          const Alphabet& target) {
    if (labeling.size() != b.alphabet().size())
        throw InputError("labeling must give one letter per symbol of the automaton");
    for (Symbol s : labeling)
        if (s >= target.size()) throw InputError("labeling uses a letter outside the target alphabet");
    Verdict hypothesis = is_strongly_unambiguous(b);
    if (!hypothesis)
        throw InputError("hypothesis violated: the automaton is not strongly unambiguous (label " +
                         b.alphabet().str(hypothesis.paths.label) + ")");
    std::vector<Edge> edges;
    for (const Edge& e : b.edges()) edges.push_back({e.src, labeling[e.label], e.dst});
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        Verdict v = Verdict::no(WitnessKind::two_finite_paths);
        v.paths = {{dup->label}, {dup->src, dup->dst}, {dup->src, dup->dst}};
        v.words = {v.paths.label};
        v.detail = "two parallel edges receive the same letter";
        return v;
    }
    Automaton relabeled(target, b.size(), std::move(edges), b.initial(), b.terminal(), b.names());
    return is_strongly_unambiguous(relabeled);
}

/// Replay check for a witness: both state sequences are paths of `a` labeled
/// by `label` and they differ.
inline bool replays(const Automaton& a, const PathPair& w) {
    if (w.first.size() != w.label.size() + 1 || w.second.size() != w.label.size() + 1) return false;
    for (std::size_t i = 0; i < w.label.size(); ++i) {
        if (!a.has_edge(w.first[i], w.label[i], w.first[i + 1])) return false;
        if (!a.has_edge(w.second[i], w.label[i], w.second[i + 1])) return false;
    }
    return w.first != w.second;
}

}  // namespace codedshift
