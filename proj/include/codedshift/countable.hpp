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
// Countable automata presented lazily: the reversible and the strongly
// unambiguous line-and-branch constructions over a finite base automaton,
// window extraction, and the automata of beta-shifts.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "codedshift/algorithms.hpp"

namespace codedshift {

using BigInt = boost::multiprecision::cpp_int;

/// A state of a countable automaton: a position on the bi-infinite line, or
/// the `offset`-th inner state of branch path number `branch`.
struct LazyState {
    enum class Kind { line, branch };
    Kind kind = Kind::line;
    BigInt position = 0;
    std::size_t branch = 0;
    std::size_t offset = 0;

    static LazyState line(BigInt n) { return {Kind::line, std::move(n), 0, 0}; }
    static LazyState inner(std::size_t i, std::size_t o) { return {Kind::branch, 0, i, o}; }

    bool operator<(const LazyState& o) const {
        return std::tie(kind, position, branch, offset) < std::tie(o.kind, o.position, o.branch, o.offset);
    }
    bool operator==(const LazyState& o) const {
        return kind == o.kind && position == o.position && branch == o.branch && offset == o.offset;
    }

    std::string name() const {
        if (kind == Kind::line) return position.str();
        return "b" + std::to_string(branch) + "." + std::to_string(offset);
    }
};

using LazyEdges = std::vector<std::pair<Symbol, LazyState>>;

/// Countable automaton given by successor and predecessor generators.
/// Results are memoized behind a mutex, so concurrent exploration is safe.
class LazyAutomaton {
public:
    virtual ~LazyAutomaton() = default;

    virtual const Alphabet& alphabet() const = 0;
    LazyState basepoint() const { return LazyState::line(0); }

    LazyEdges successors(const LazyState& s) const { return cached(s, true); }
    LazyEdges predecessors(const LazyState& s) const { return cached(s, false); }

protected:
    virtual LazyEdges compute_successors(const LazyState& s) const = 0;
    virtual LazyEdges compute_predecessors(const LazyState& s) const = 0;

private:
    LazyEdges cached(const LazyState& s, bool forward) const {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto& cache = forward ? succ_ : pred_;
            if (auto it = cache.find(s); it != cache.end()) return it->second;
        }
        LazyEdges edges = forward ? compute_successors(s) : compute_predecessors(s);
        std::lock_guard<std::mutex> lock(mutex_);
        auto& cache = forward ? succ_ : pred_;
        return cache.emplace(s, std::move(edges)).first->second;
    }

    mutable std::mutex mutex_;
    mutable std::map<LazyState, LazyEdges> succ_;
    mutable std::map<LazyState, LazyEdges> pred_;
};

/// A line automaton: states ℤ with edges n -x_n-> n+1, plus branch paths.
/// Subclasses provide the letter x_n and the branch endpoints.
class LineAutomaton : public LazyAutomaton {
public:
    struct Branch {
        BigInt from;
        BigInt to;
        Word label;
    };

    const Alphabet& alphabet() const override { return alphabet_; }

    virtual Symbol letter(const BigInt& n) const = 0;
    /// Branch leaving line position n, if any.
    virtual std::optional<std::size_t> branch_from(const BigInt& n) const = 0;
    /// Branch entering line position n, if any.
    virtual std::optional<std::size_t> branch_to(const BigInt& n) const = 0;
    virtual Branch branch(std::size_t i) const = 0;

protected:
    explicit LineAutomaton(Alphabet a) : alphabet_(std::move(a)) {}

    LazyEdges compute_successors(const LazyState& s) const override {
        LazyEdges out;
        if (s.kind == LazyState::Kind::line) {
            out.emplace_back(letter(s.position), LazyState::line(s.position + 1));
            if (auto i = branch_from(s.position)) {
                Branch b = branch(*i);
                out.emplace_back(b.label[0], b.label.size() == 1 ? LazyState::line(b.to) : LazyState::inner(*i, 1));
            }
            return out;
        }
        Branch b = branch(s.branch);
        Symbol x = b.label[s.offset];
        out.emplace_back(x, s.offset + 1 == b.label.size() ? LazyState::line(b.to)
                                                           : LazyState::inner(s.branch, s.offset + 1));
        return out;
    }

    LazyEdges compute_predecessors(const LazyState& s) const override {
        LazyEdges out;
        if (s.kind == LazyState::Kind::line) {
            BigInt prev = s.position - 1;
            out.emplace_back(letter(prev), LazyState::line(prev));
            if (auto i = branch_to(s.position)) {
                Branch b = branch(*i);
                std::size_t last = b.label.size() - 1;
                out.emplace_back(b.label[last], last == 0 ? LazyState::line(b.from) : LazyState::inner(*i, last));
            }
            return out;
        }
        Branch b = branch(s.branch);
        Symbol x = b.label[s.offset - 1];
        out.emplace_back(x, s.offset == 1 ? LazyState::line(b.from) : LazyState::inner(s.branch, s.offset - 1));
        return out;
    }

private:
    Alphabet alphabet_;
};

/// Data extracted from a strongly connected base automaton at state q:
/// ya, yb start at q; ct, dt end at q; y a u1 c t and y b u2 d t are cycles.
struct FiebigSeed {
    Automaton base;
    State q = 0;
    Word y, t, u1, u2;
    Symbol a = 0, b = 0, c = 0, d = 0;

    Word u() const { return concat(concat(Word{a}, u1), Word{c}); }
    Word v() const { return concat(concat(Word{b}, u2), Word{d}); }
    Word w() const { return concat(t, y); }
};

/// Every infinite path has the same label: the shift is coded by one word.
struct SingleWordCase {
    Word cycle;
};

namespace detail {

inline bool strongly_connected(const Automaton& a) {
    if (a.size() == 0) return false;
    auto scc = tarjan(graph_of(a));
    return scc.members.size() == 1 && !scc.trivial[0];
}

/// Shortest word z (length-lex) with two enabled letters after reading z from
/// `start` in `a`; returns z, the reached set and the two letters.
inline std::optional<std::tuple<Word, std::vector<State>, Symbol, Symbol>> branching(const Automaton& a,
                                                                                   std::vector<State> start) {
    std::map<std::vector<State>, bool> seen{{start, true}};
    std::deque<std::pair<Word, std::vector<State>>> queue{{Word{}, start}};
    while (!queue.empty()) {
        auto [z, set] = queue.front();
        queue.pop_front();
        std::vector<Symbol> enabled;
        for (Symbol x = 0; x < a.alphabet().size(); ++x)
            if (!a.step(set, x).empty()) enabled.push_back(x);
        if (enabled.size() >= 2) return std::make_tuple(z, set, enabled[0], enabled[1]);
        for (Symbol x : enabled) {
            auto next = a.step(set, x);
            if (seen.emplace(next, true).second) {
                Word zx = z;
                zx.push_back(x);
                queue.emplace_back(zx, next);
            }
        }
    }
    return std::nullopt;
}

inline Word connector(const Automaton& a, const std::vector<State>& from, const std::vector<State>& to) {
    auto g = graph_of(a);
    std::vector<std::size_t> sources(from.begin(), from.end());
    std::vector<bool> target(a.size(), false);
    for (State s : to) target[s] = true;
    auto path = shortest_path(g, sources, [&](std::size_t v) { return target[v]; },
                              [](std::size_t, std::size_t) { return true; });
    ensure(path.has_value(), "strongly connected base without a connecting path");
    return path->labels;
}

}  // namespace detail

/// Seed of the countable constructions at state q of a strongly connected
/// base. y is the length-lex least branching word from q; t is found the same
/// way on the reversed automaton.
inline std::variant<FiebigSeed, SingleWordCase> fiebig_seed(const Automaton& base, State q = 0) {
    Automaton all = factor_automaton(base);
    if (!detail::strongly_connected(all)) throw InputError("base automaton is not strongly connected");
    if (q >= all.size()) throw InputError("seed state out of range");
    auto forward = detail::branching(all, {q});
    if (!forward) {
        auto g = graph_of(all);
        auto cycle = shortest_cycle_through(g, q, [](std::size_t) { return true; });
        ensure(cycle.has_value(), "strongly connected state without a cycle");
        return SingleWordCase{cycle->labels};
    }
    Automaton rev = reverse(all);
    auto backward = detail::branching(rev, {q});
    ensure(backward.has_value(), "forward branching without backward branching");
    FiebigSeed s;
    s.base = all;
    s.q = q;
    auto& [y, after_y, a, b] = *forward;
    auto& [t_rev, before_t, c, d] = *backward;
    s.y = y;
    s.a = a;
    s.b = b;
    s.t.assign(t_rev.rbegin(), t_rev.rend());
    s.c = c;
    s.d = d;
    s.u1 = detail::connector(all, all.step(after_y, a), all.step_back(before_t, c));
    s.u2 = detail::connector(all, all.step(after_y, b), all.step_back(before_t, d));
    return s;
}

namespace detail {

/// Labels of all cycles at q in length-lex order, ε first, grown on demand.
class CycleLabels {
public:
    CycleLabels(const Automaton& base, State q) : base_(base), q_(q) {
        frontier_.emplace_back(Word{}, std::vector<State>{q});
        labels_.push_back(Word{});
    }

    const Word& at(std::size_t i) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (labels_.size() <= i) grow();
        return labels_[i];
    }

private:
    void grow() {
        for (;;) {
            ensure(!frontier_.empty(), "base has no cycle at the seed state");
            std::vector<std::pair<Word, std::vector<State>>> next;
            std::size_t before = labels_.size();
            for (const auto& [z, set] : frontier_)
                for (Symbol x = 0; x < base_.alphabet().size(); ++x) {
                    auto to = base_.step(set, x);
                    if (to.empty()) continue;
                    Word zx = z;
                    zx.push_back(x);
                    if (std::binary_search(to.begin(), to.end(), q_)) labels_.push_back(zx);
                    next.emplace_back(std::move(zx), std::move(to));
                }
            frontier_ = std::move(next);
            if (labels_.size() > before) return;
        }
    }

    Automaton base_;
    State q_;
    std::vector<std::pair<Word, std::vector<State>>> frontier_;
    std::vector<Word> labels_;
    std::mutex mutex_;
};

}  // namespace detail

/// Reversible construction. The line carries ... U w'_{-1} U · w'_0 U w'_1 ...
/// with U = a u1 c and w'_i = t w_i y, where w_i for i in ℤ is the zig-zag
/// (0, 1, -1, 2, -2, ...) of the length-lex cycle labels. For every n >= 0 a
/// branch labeled b u2 d runs from the end of w'_n to the start of w'_{-n}.
class ReversibleFiebig : public LineAutomaton {
public:
    explicit ReversibleFiebig(FiebigSeed seed)
        : LineAutomaton(seed.base.alphabet()), seed_(std::move(seed)), cycles_(seed_.base, seed_.q) {
        big_u_ = seed_.u();
        v_ = seed_.v();
    }

    const FiebigSeed& seed() const { return seed_; }

    /// w'_i = t w_i y.
    Word block_word(long long i) const {
        std::size_t e = i > 0 ? static_cast<std::size_t>(2 * i - 1) : static_cast<std::size_t>(-2 * i);
        return concat(concat(seed_.t, cycles_.at(e)), seed_.y);
    }

    /// Start position of w'_i.
    BigInt block_start(long long i) const {
        std::lock_guard<std::mutex> lock(mutex_);
        return start_locked(i);
    }

    Symbol letter(const BigInt& n) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        long long i = 0;
        if (n >= 0) {
            while (start_locked(i + 1) <= n) ++i;
        } else {
            while (start_locked(i) > n) --i;
        }
        BigInt off = n - start_locked(i);
        Word wi = word_locked(i);
        if (off < wi.size()) return wi[static_cast<std::size_t>(off)];
        return big_u_[static_cast<std::size_t>(off - wi.size())];
    }

    std::optional<std::size_t> branch_from(const BigInt& n) const override {
        if (n < 0) return std::nullopt;
        std::lock_guard<std::mutex> lock(mutex_);
        for (long long k = 0;; ++k) {
            BigInt p = start_locked(k) + word_locked(k).size();
            if (p == n) return static_cast<std::size_t>(k);
            if (p > n) return std::nullopt;
        }
    }

    std::optional<std::size_t> branch_to(const BigInt& n) const override {
        if (n > 0) return std::nullopt;
        std::lock_guard<std::mutex> lock(mutex_);
        for (long long k = 0;; ++k) {
            BigInt q = start_locked(-k);
            if (q == n) return static_cast<std::size_t>(k);
            if (q < n) return std::nullopt;
        }
    }

    Branch branch(std::size_t k) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        long long i = static_cast<long long>(k);
        return {start_locked(i) + word_locked(i).size(), start_locked(-i), v_};
    }

private:
    Word word_locked(long long i) const {
        auto it = words_.find(i);
        if (it != words_.end()) return it->second;
        return words_.emplace(i, block_word(i)).first->second;
    }

    BigInt start_locked(long long i) const {
        if (starts_.empty()) starts_.emplace(0, BigInt(0));
        if (auto it = starts_.find(i); it != starts_.end()) return it->second;
        BigInt s;
        if (i > 0)
            s = start_locked(i - 1) + word_locked(i - 1).size() + big_u_.size();
        else
            s = start_locked(i + 1) - word_locked(i).size() - big_u_.size();
        starts_.emplace(i, s);
        return s;
    }

    FiebigSeed seed_;
    mutable detail::CycleLabels cycles_;
    Word big_u_, v_;
    mutable std::mutex mutex_;
    mutable std::map<long long, Word> words_;
    mutable std::map<long long, BigInt> starts_;
};

/// Schedule entry i (i >= 1) of the strongly unambiguous construction.
struct ScheduleEntry {
    BigInt m;          // exponent of (uw) in block i
    BigInt k;          // connector index, k_1 = m_1, k_i = m_1 + i - 1
    BigInt s_length;   // |s_i|
    BigInt start;      // position of the first letter of (uw)^{m_i} v w_{-i}
    BigInt n_vertex;   // N_i: end of the first u of the block
    BigInt m_vertex;   // M_i: end of (wu)^{k_i} w read from 0
    Word w_minus;      // w_{-i} = t w'_i y
};

/// Strongly unambiguous and reversible construction. The line carries
/// ... (uw)^{m_2} v w_{-2} (uw)^{m_1} v w_{-1} u · (wu)^∞ and branch i,
/// labeled v, runs from M_i to N_i. The enumeration w'_i (i >= 1) is the
/// length-lex list of cycle labels at q starting with ε.
class StronglyUnambiguousFiebig : public LineAutomaton {
public:
    explicit StronglyUnambiguousFiebig(FiebigSeed seed)
        : LineAutomaton(seed.base.alphabet()), seed_(std::move(seed)), cycles_(seed_.base, seed_.q) {
        u_ = seed_.u();
        v_ = seed_.v();
        w_ = seed_.w();
        uw_ = concat(u_, w_);
        wu_ = concat(w_, u_);
    }

    const FiebigSeed& seed() const { return seed_; }
    const Word& u() const { return u_; }
    const Word& v() const { return v_; }
    const Word& w() const { return w_; }

    ScheduleEntry schedule(std::size_t i) const {
        std::lock_guard<std::mutex> lock(mutex_);
        return entry_locked(i);
    }

    Symbol letter(const BigInt& n) const override {
        if (n >= 0) return wu_[static_cast<std::size_t>(n % wu_.size())];
        BigInt lead = -BigInt(u_.size());
        if (n >= lead) return u_[static_cast<std::size_t>(n - lead)];
        std::lock_guard<std::mutex> lock(mutex_);
        std::size_t i = 1;
        while (entry_locked(i).start > n) ++i;
        const ScheduleEntry& e = entry_locked(i);
        BigInt off = n - e.start;
        BigInt periodic = e.m * uw_.size();
        if (off < periodic) return uw_[static_cast<std::size_t>(off % uw_.size())];
        off -= periodic;
        if (off < v_.size()) return v_[static_cast<std::size_t>(off)];
        return e.w_minus.at(static_cast<std::size_t>(off - v_.size()));
    }

    std::optional<std::size_t> branch_from(const BigInt& n) const override {
        if (n < 0) return std::nullopt;
        BigInt rest = n - w_.size();
        if (rest < 0 || rest % wu_.size() != 0) return std::nullopt;
        std::lock_guard<std::mutex> lock(mutex_);
        BigInt k = rest / wu_.size();
        BigInt m1 = entry_locked(1).m;
        if (k < m1) return std::nullopt;
        return static_cast<std::size_t>(k - m1 + 1);
    }

    std::optional<std::size_t> branch_to(const BigInt& n) const override {
        if (n >= 0) return std::nullopt;
        std::lock_guard<std::mutex> lock(mutex_);
        for (std::size_t i = 1;; ++i) {
            const ScheduleEntry& e = entry_locked(i);
            if (e.n_vertex == n) return i;
            if (e.start < n) return std::nullopt;
        }
    }

    Branch branch(std::size_t i) const override {
        std::lock_guard<std::mutex> lock(mutex_);
        const ScheduleEntry& e = entry_locked(i);
        return {e.m_vertex, e.n_vertex, v_};
    }

private:
    const ScheduleEntry& entry_locked(std::size_t i) const {
        ensure(i >= 1, "schedule indices start at 1");
        while (entries_.size() < i) {
            std::size_t j = entries_.size() + 1;
            ScheduleEntry e;
            e.w_minus = concat(concat(seed_.t, cycles_.at(j - 1)), seed_.y);
            BigInt prev_start = -BigInt(u_.size());
            if (j == 1) {
                e.s_length = 2 * v_.size() + e.w_minus.size();
            } else {
                const ScheduleEntry& p = entries_.back();
                e.s_length = v_.size() + e.w_minus.size() + p.m * uw_.size() + p.s_length;
                prev_start = p.start;
            }
            BigInt period = uw_.size();
            e.m = 1 + (2 * e.s_length + period - 1) / period;
            e.k = j == 1 ? e.m : entries_.front().m + (j - 1);
            BigInt block = e.m * period + v_.size() + e.w_minus.size();
            e.start = prev_start - block;
            e.n_vertex = e.start + u_.size();
            e.m_vertex = e.k * wu_.size() + w_.size();
            entries_.push_back(std::move(e));
        }
        return entries_[i - 1];
    }

    FiebigSeed seed_;
    mutable detail::CycleLabels cycles_;
    Word u_, v_, w_, uw_, wu_;
    mutable std::mutex mutex_;
    mutable std::deque<ScheduleEntry> entries_;
};

/// Finite truncation of a lazy automaton around its basepoint.
struct Window {
    Automaton automaton;          // every state initial and terminal
    std::vector<LazyState> states;
    std::vector<bool> boundary;   // some neighbor lies outside the window
};

/// States within undirected distance `radius` of the basepoint, in
/// breadth-first order, with every edge among them.
inline Window window(const LazyAutomaton& la, std::size_t radius) {
    Window out;
    std::map<LazyState, State> index;
    std::vector<std::size_t> dist;
    auto add = [&](const LazyState& s, std::size_t d) {
        auto [it, inserted] = index.emplace(s, static_cast<State>(out.states.size()));
        if (inserted) {
            out.states.push_back(s);
            dist.push_back(d);
        }
    };
    add(la.basepoint(), 0);
    for (std::size_t i = 0; i < out.states.size(); ++i) {
        if (dist[i] == radius) continue;
        LazyState s = out.states[i];
        for (const auto& [x, t] : la.successors(s)) add(t, dist[i] + 1);
        for (const auto& [x, t] : la.predecessors(s)) add(t, dist[i] + 1);
    }
    std::vector<Edge> edges;
    std::vector<std::string> names;
    out.boundary.assign(out.states.size(), false);
    for (State i = 0; i < out.states.size(); ++i) {
        names.push_back(out.states[i].name());
        for (const auto& [x, t] : la.successors(out.states[i])) {
            auto it = index.find(t);
            if (it == index.end())
                out.boundary[i] = true;
            else
                edges.push_back({i, x, it->second});
        }
        for (const auto& [x, t] : la.predecessors(out.states[i]))
            if (!index.count(t)) out.boundary[i] = true;
    }
    out.automaton = Automaton::all_states(la.alphabet(), out.states.size(), std::move(edges), std::move(names));
    return out;
}

/// Generating sequence g = preperiod · period^ω of a beta-shift.
struct BetaSpec {
    std::vector<unsigned> preperiod;
    std::vector<unsigned> period;

    /// Normalizes a finite expansion d(1) = x_1 ... x_k (x_k != 0) into the
    /// period x_1 ... x_{k-1} (x_k - 1).
    static BetaSpec from_expansion(std::vector<unsigned> digits) {
        while (!digits.empty() && digits.back() == 0) digits.pop_back();
        if (digits.empty()) throw InputError("expansion of 1 must have a non-zero digit");
        digits.back() -= 1;
        return BetaSpec{{}, digits};
    }

    std::size_t size() const { return preperiod.size() + period.size(); }

    /// g_{i+1} for 0 <= i.
    unsigned digit(std::size_t i) const {
        if (i < preperiod.size()) return preperiod[i];
        return period[(i - preperiod.size()) % period.size()];
    }

    unsigned max_digit() const {
        unsigned m = 0;
        for (unsigned x : preperiod) m = std::max(m, x);
        for (unsigned x : period) m = std::max(m, x);
        return m;
    }
};

/// Folded chain automaton of a beta-shift: state i has an edge labeled
/// g_{i+1} to i+1 (the last state returns to the start of the period) and
/// edges labeled 0 .. g_{i+1}-1 back to 0. Digits form the alphabet 0..max g.
inline Automaton beta_automaton(const BetaSpec& spec) {
    if (spec.period.empty()) throw InputError("period must not be empty");
    bool zero = true;
    for (unsigned x : spec.period) {
        if (x > 9) throw InputError("digits must be at most 9");
        zero = zero && x == 0;
    }
    for (unsigned x : spec.preperiod)
        if (x > 9) throw InputError("digits must be at most 9");
    if (zero) throw InputError("all-zero period");
    std::string chars;
    for (unsigned x = 0; x <= spec.max_digit(); ++x) chars.push_back(static_cast<char>('0' + x));
    Alphabet digits(chars);
    const std::size_t n = spec.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned g = spec.digit(i);
        State next = i + 1 < n ? static_cast<State>(i + 1) : static_cast<State>(spec.preperiod.size());
        edges.push_back({static_cast<State>(i), g, next});
        for (unsigned x = 0; x < g; ++x) edges.push_back({static_cast<State>(i), x, 0});
    }
    return Automaton::all_states(digits, n, std::move(edges));
}

}  // namespace codedshift
