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
// Labeled digraph utilities: Tarjan SCCs, bi-infinite vertices, shortlex BFS.
// Used directly on automata and on the product graphs built by other modules.

#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "codedshift/core.hpp"

namespace codedshift {

/// Adjacency lists of (label, target), kept sorted by (label, target).
struct LabeledGraph {
    std::vector<std::vector<std::pair<Symbol, std::size_t>>> out;

    std::size_t size() const { return out.size(); }

    void sort_edges() {
        for (auto& list : out) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    LabeledGraph reversed() const {
        LabeledGraph rev;
        rev.out.resize(out.size());
        for (std::size_t v = 0; v < out.size(); ++v)
            for (auto [label, w] : out[v]) rev.out[w].emplace_back(label, v);
        rev.sort_edges();
        return rev;
    }
};

struct SccDecomposition {
    /// Component index of each vertex.
    std::vector<std::size_t> component;
    /// Members of each component; components are in topological order
    /// (every edge goes from a component to itself or to a later one).
    std::vector<std::vector<std::size_t>> members;
    /// A component is trivial iff it carries no edge (a self-loop is an edge).
    std::vector<bool> trivial;
    /// Condensation DAG: distinct successor components.
    std::vector<std::vector<std::size_t>> successors;
};

inline SccDecomposition tarjan(const LabeledGraph& g) {
    const std::size_t n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> found;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < g.out[f.v].size()) {
                std::size_t w = g.out[f.v][f.next++].second;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::size_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> members;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = found.size();
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                found.push_back(std::move(members));
            }
        }
    }
    // Tarjan emits components in reverse topological order.
    SccDecomposition out;
    const std::size_t k = found.size();
    out.component.assign(n, 0);
    out.members.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        out.members[k - 1 - c] = std::move(found[c]);
    }
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t v : out.members[c]) out.component[v] = c;
    out.trivial.assign(k, true);
    out.successors.assign(k, {});
    for (std::size_t v = 0; v < n; ++v) {
        for (auto [label, w] : g.out[v]) {
            std::size_t cv = out.component[v], cw = out.component[w];
            if (cv == cw)
                out.trivial[cv] = false;
            else
                out.successors[cv].push_back(cw);
        }
    }
    for (auto& s : out.successors) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return out;
}

/// Vertices reachable from any vertex in `sources` (sources included).
inline std::vector<bool> reachable_from(const LabeledGraph& g, const std::vector<bool>& sources) {
    std::vector<bool> seen = sources;
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (seen[v]) queue.push_back(v);
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (auto [label, w] : g.out[v])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    return seen;
}

/// Vertices lying in a non-trivial strongly connected component.
inline std::vector<bool> cyclic_vertices(const LabeledGraph& g, const SccDecomposition& scc) {
    std::vector<bool> out(g.size(), false);
    for (std::size_t v = 0; v < g.size(); ++v) out[v] = !scc.trivial[scc.component[v]];
    return out;
}

/// Vertices through which a bi-infinite path passes: reachable from a cycle
/// and co-reachable to a cycle.
inline std::vector<bool> biinfinite_vertices(const LabeledGraph& g) {
    auto scc = tarjan(g);
    auto cyclic = cyclic_vertices(g, scc);
    auto forward = reachable_from(g, cyclic);
    auto backward = reachable_from(g.reversed(), cyclic);
    std::vector<bool> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) out[v] = forward[v] && backward[v];
    return out;
}

/// A path in a labeled graph: vertices v0..vk and labels l0..l(k-1).
struct GraphPath {
    std::vector<std::size_t> vertices;
    Word labels;
};

/// Shortlex-minimal path from any source to any vertex satisfying `is_target`.
/// Vertices reached by the same word are expanded together, so the returned
/// label is the shortlex-least among all qualifying paths. A source counts as a
/// target only when `allow_empty` is set. `allowed(v, w)` filters edges.
template <class Target, class Allowed>
std::optional<GraphPath> shortest_path(const LabeledGraph& g, const std::vector<std::size_t>& sources,
                                       Target is_target, Allowed allowed, bool allow_empty = true) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    struct Node {
        std::size_t vertex;
        std::size_t parent;
        Symbol label;
    };
    std::vector<Node> nodes;
    std::vector<bool> seen(g.size(), false);
    auto build = [&](std::size_t node, std::optional<std::pair<Symbol, std::size_t>> last) {
        GraphPath p;
        for (std::size_t x = node; x != none; x = nodes[x].parent) {
            p.vertices.push_back(nodes[x].vertex);
            if (nodes[x].parent != none) p.labels.push_back(nodes[x].label);
        }
        std::reverse(p.vertices.begin(), p.vertices.end());
        std::reverse(p.labels.begin(), p.labels.end());
        if (last) {
            p.labels.push_back(last->first);
            p.vertices.push_back(last->second);
        }
        return p;
    };
    std::vector<std::size_t> start = sources;
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    std::vector<std::vector<std::size_t>> level(1);
    for (std::size_t s : start) {
        seen[s] = true;
        nodes.push_back({s, none, 0});
        if (allow_empty && is_target(s)) return build(nodes.size() - 1, std::nullopt);
        level[0].push_back(nodes.size() - 1);
    }
    struct Step {
        Symbol label;
        std::size_t target;
        std::size_t from;
        bool operator<(const Step& o) const {
            return std::tie(label, target, from) < std::tie(o.label, o.target, o.from);
        }
    };
    while (!level.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& group : level) {
            std::vector<Step> steps;
            for (std::size_t node : group) {
                std::size_t v = nodes[node].vertex;
                for (auto [label, w] : g.out[v])
                    if (allowed(v, w)) steps.push_back({label, w, node});
            }
            std::sort(steps.begin(), steps.end());
            std::size_t i = 0;
            while (i < steps.size()) {
                Symbol label = steps[i].label;
                std::vector<std::size_t> fresh;
                for (; i < steps.size() && steps[i].label == label; ++i) {
                    const Step& st = steps[i];
                    if (is_target(st.target))
                        return build(st.from, std::make_pair(st.label, st.target));
                    if (seen[st.target]) continue;
                    seen[st.target] = true;
                    nodes.push_back({st.target, st.from, st.label});
                    fresh.push_back(nodes.size() - 1);
                }
                if (!fresh.empty()) next.push_back(std::move(fresh));
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

/// Shortlex-minimal cycle through `v` staying inside vertices where `inside` holds.
template <class Inside>
std::optional<GraphPath> shortest_cycle_through(const LabeledGraph& g, std::size_t v, Inside inside) {
    return shortest_path(
        g, {v}, [&](std::size_t w) { return w == v; },
        [&](std::size_t, std::size_t w) { return inside(w); }, false);
}

/// Shortest cycle (then shortlex label, then smallest start) among vertices in
/// non-trivial components selected by `wanted`.
template <class Wanted>
std::optional<GraphPath> shortest_cycle(const LabeledGraph& g, const SccDecomposition& scc,
                                        Wanted wanted) {
    std::optional<GraphPath> best;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::size_t c = scc.component[v];
        if (scc.trivial[c] || !wanted(v)) continue;
        auto cycle = shortest_cycle_through(g, v, [&](std::size_t w) { return scc.component[w] == c; });
        if (!cycle) continue;
        if (!best || ShortLex{}(cycle->labels, best->labels)) best = std::move(cycle);
    }
    return best;
}

}  // namespace codedshift
