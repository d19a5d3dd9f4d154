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
// Finite labeled automata (Q, E, I, T) and partial deterministic automata.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "codedshift/core.hpp"

namespace codedshift {

struct Edge {
    State src = 0;
    Symbol label = 0;
    State dst = 0;

    auto operator<=>(const Edge&) const = default;
};

/// A finite multigraph with edges labeled by an alphabet, plus initial and
/// terminal state sets. Immutable once built; edge order is preserved.
class Automaton {
public:
    Automaton() = default;

    Automaton(Alphabet alphabet, std::size_t num_states, std::vector<Edge> edges,
              std::vector<State> initial, std::vector<State> terminal,
              std::vector<std::string> names = {})
        : alphabet_(std::move(alphabet)),
          num_states_(num_states),
          edges_(std::move(edges)),
          initial_(std::move(initial)),
          terminal_(std::move(terminal)),
          names_(std::move(names)) {
        normalize_set(initial_, "initial");
        normalize_set(terminal_, "terminal");
        if (!names_.empty() && names_.size() != num_states_)
            throw InputError("state name list does not match the number of states");
        std::vector<Edge> sorted = edges_;
        for (const Edge& e : sorted) {
            if (e.src >= num_states_ || e.dst >= num_states_)
                throw InputError("edge endpoint out of range: " + std::to_string(e.src) + " -> " +
                                 std::to_string(e.dst));
            if (e.label >= alphabet_.size())
                throw InputError("edge label out of range: " + std::to_string(e.label));
        }
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw InputError("duplicate edge " + std::to_string(dup->src) + " " +
                             std::string(1, alphabet_.display(dup->label)) + " " +
                             std::to_string(dup->dst));
        out_.assign(num_states_, {});
        in_.assign(num_states_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            out_[edges_[i].src].push_back(i);
            in_[edges_[i].dst].push_back(i);
        }
    }

    /// Every state initial and terminal: the convention for shift presentations.
    static Automaton all_states(Alphabet alphabet, std::size_t num_states, std::vector<Edge> edges,
                                std::vector<std::string> names = {}) {
        std::vector<State> all(num_states);
        std::iota(all.begin(), all.end(), State{0});
        return Automaton(std::move(alphabet), num_states, std::move(edges), all, all,
                         std::move(names));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return num_states_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    const std::vector<State>& initial() const { return initial_; }
    const std::vector<State>& terminal() const { return terminal_; }
    const std::vector<std::size_t>& out(State q) const { return out_.at(q); }
    const std::vector<std::size_t>& in(State q) const { return in_.at(q); }
    const std::vector<std::string>& names() const { return names_; }

    std::string name(State q) const { return names_.empty() ? std::to_string(q) : names_.at(q); }

    bool is_initial(State q) const { return std::binary_search(initial_.begin(), initial_.end(), q); }
    bool is_terminal(State q) const {
        return std::binary_search(terminal_.begin(), terminal_.end(), q);
    }

    bool has_edge(State src, Symbol label, State dst) const {
        for (std::size_t i : out_.at(src))
            if (edges_[i].label == label && edges_[i].dst == dst) return true;
        return false;
    }

    /// States reached from `from` by one edge labeled `label`.
    std::vector<State> successors(State from, Symbol label) const {
        std::vector<State> out;
        for (std::size_t i : out_.at(from))
            if (edges_[i].label == label) out.push_back(edges_[i].dst);
        return out;
    }

    /// Image of a sorted state set under one letter (sorted, deduplicated).
    std::vector<State> step(const std::vector<State>& from, Symbol label) const {
        std::vector<State> out;
        for (State q : from)
            for (std::size_t i : out_[q])
                if (edges_[i].label == label) out.push_back(edges_[i].dst);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<State> step_back(const std::vector<State>& to, Symbol label) const {
        std::vector<State> out;
        for (State q : to)
            for (std::size_t i : in_[q])
                if (edges_[i].label == label) out.push_back(edges_[i].src);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<State> read(std::vector<State> from, const Word& w) const {
        std::sort(from.begin(), from.end());
        from.erase(std::unique(from.begin(), from.end()), from.end());
        for (Symbol s : w) {
            from = step(from, s);
            if (from.empty()) break;
        }
        return from;
    }

    bool accepts(const Word& w) const {
        for (State q : read(initial_, w))
            if (is_terminal(q)) return true;
        return false;
    }

    /// True if some path (from any state) carries the label `w`.
    bool has_path_labeled(const Word& w) const {
        std::vector<State> all(num_states_);
        std::iota(all.begin(), all.end(), State{0});
        return num_states_ > 0 && !read(all, w).empty();
    }

private:
    void normalize_set(std::vector<State>& set, const char* what) const {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (State q : set)
            if (q >= num_states_)
                throw InputError(std::string(what) + " state " + std::to_string(q) + " out of range");
    }

    Alphabet alphabet_;
    std::size_t num_states_ = 0;
    std::vector<Edge> edges_;
    std::vector<State> initial_;
    std::vector<State> terminal_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

/// Partial deterministic automaton (Q, i, T). Missing transitions stay missing.
class Dfa {
public:
    Dfa() = default;

    Dfa(Alphabet alphabet, std::size_t num_states, State initial, std::vector<bool> terminal,
        std::vector<std::string> names = {})
        : alphabet_(std::move(alphabet)),
          num_states_(num_states),
          initial_(initial),
          terminal_(std::move(terminal)),
          table_(num_states * alphabet_.size(), kNoState),
          names_(std::move(names)) {
        if (num_states_ == 0) throw InputError("a deterministic automaton needs at least one state");
        if (initial_ >= num_states_) throw InputError("initial state out of range");
        if (terminal_.size() != num_states_)
            throw InputError("terminal flags do not match the number of states");
        if (!names_.empty() && names_.size() != num_states_)
            throw InputError("state name list does not match the number of states");
    }

    void set(State from, Symbol label, State to) {
        if (from >= num_states_ || to >= num_states_ || label >= alphabet_.size())
            throw InputError("transition out of range");
        table_[from * alphabet_.size() + label] = to;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return num_states_; }
    State initial() const { return initial_; }
    bool is_terminal(State q) const { return terminal_.at(q); }
    const std::vector<bool>& terminal() const { return terminal_; }
    const std::vector<std::string>& names() const { return names_; }
    std::string name(State q) const { return names_.empty() ? std::to_string(q) : names_.at(q); }

    State next(State from, Symbol label) const {
        if (from == kNoState) return kNoState;
        return table_[from * alphabet_.size() + label];
    }

    State read(State from, const Word& w) const {
        for (Symbol s : w) {
            from = next(from, s);
            if (from == kNoState) break;
        }
        return from;
    }

    bool accepts(const Word& w) const {
        State q = read(initial_, w);
        return q != kNoState && terminal_[q];
    }

    Automaton to_automaton() const {
        std::vector<Edge> edges;
        for (State q = 0; q < num_states_; ++q)
            for (Symbol a = 0; a < alphabet_.size(); ++a)
                if (State r = next(q, a); r != kNoState) edges.push_back({q, a, r});
        std::vector<State> terminal;
        for (State q = 0; q < num_states_; ++q)
            if (terminal_[q]) terminal.push_back(q);
        return Automaton(alphabet_, num_states_, std::move(edges), {initial_}, std::move(terminal),
                         names_);
    }

    bool operator==(const Dfa& other) const {
        return alphabet_ == other.alphabet_ && num_states_ == other.num_states_ &&
               initial_ == other.initial_ && terminal_ == other.terminal_ &&
               table_ == other.table_;
    }

private:
    Alphabet alphabet_;
    std::size_t num_states_ = 0;
    State initial_ = 0;
    std::vector<bool> terminal_;
    std::vector<State> table_;
    std::vector<std::string> names_;
};

}  // namespace codedshift
