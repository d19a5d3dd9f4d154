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

#include <gtest/gtest.h>

#include <random>

#include "codedshift/codedshift.hpp"
#include "oracles.hpp"

using namespace codedshift;

namespace {

const Alphabet ab("ab");

Automaton even() { return Automaton::all_states(ab, 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}}); }
Automaton golden() { return Automaton::all_states(ab, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}}); }

/// The edge shift of `a`: letter i is the i-th edge.
Automaton edge_shift(const Automaton& a) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a.edges().size(); ++i)
        edges.push_back({a.edge(i).src, static_cast<Symbol>(i), a.edge(i).dst});
    return Automaton::all_states(Alphabet::indexed(a.edges().size()), a.size(), edges);
}

/// The three-state subshift of the edge shift of even(): e f g e, e loop.
Automaton efg() {
    return Automaton::all_states(Alphabet::indexed(3), 3, {{0, 0, 0}, {0, 1, 1}, {1, 2, 2}, {2, 0, 0}});
}

bool strongly_connected(const Automaton& a) {
    auto s = scc(a);
    return s.members.size() == 1 && !s.trivial[0];
}

bool ends_agree(const PathPair& p) {
    return p.first.front() == p.second.front() && p.first.back() == p.second.back();
}

}  // namespace

TEST(IsUnambiguous, Examples) {
    EXPECT_TRUE(is_unambiguous(even()));
    Automaton diamond(ab, 4, {{0, 0, 1}, {0, 0, 2}, {1, 1, 3}, {2, 1, 3}}, {0}, {3});
    Verdict v = is_unambiguous(diamond);
    ASSERT_FALSE(v);
    EXPECT_EQ(v.kind, WitnessKind::two_finite_paths);
    EXPECT_EQ(ab.str(v.paths.label), "ab");
    EXPECT_TRUE(replays(diamond, v.paths));
    EXPECT_TRUE(ends_agree(v.paths));
}

TEST(IsUnambiguous, DeterministicAutomataAreUnambiguous) {
    std::mt19937 rng(20);
    for (int i = 0; i < 100; ++i) {
        Automaton a = oracle::random_automaton(rng, 1 + i % 5, 2, 0.3);
        if (!is_deterministic(a)) continue;
        EXPECT_TRUE(is_unambiguous(a));
    }
}

TEST(IsUnambiguous, AgreesWithPathCounting) {
    std::mt19937 rng(21);
    int ambiguous = 0;
    for (int i = 0; i < 200; ++i) {
        Automaton a = oracle::random_automaton(rng, 1 + i % 5, 2, 0.25);
        Verdict v = is_unambiguous(a);
        bool brute = oracle::ambiguous_upto(a, 10);
        if (v) {
            ASSERT_FALSE(brute) << serialize(a);
            continue;
        }
        ++ambiguous;
        ASSERT_TRUE(replays(a, v.paths)) << serialize(a);
        ASSERT_TRUE(ends_agree(v.paths)) << serialize(a);
        // Path counting at length <= 10 is complete unless the witness is longer.
        if (v.paths.label.size() <= 10) {
            ASSERT_TRUE(brute) << serialize(a);
        }
        auto counts = oracle::path_counts(a, v.paths.label);
        EXPECT_GE(counts[v.paths.first.front()][v.paths.first.back()], 2u);
    }
    EXPECT_GT(ambiguous, 20);
}

TEST(IsStronglyUnambiguous, Examples) {
    Verdict v = is_strongly_unambiguous(even());
    ASSERT_FALSE(v);
    EXPECT_EQ(v.kind, WitnessKind::pair_cycle);
    EXPECT_EQ(ab.str(v.paths.label), "bb");
    EXPECT_TRUE(replays(even(), v.paths));
    EXPECT_TRUE(is_strongly_unambiguous(golden()));
    EXPECT_TRUE(is_strongly_unambiguous(Automaton(ab, 1, {{0, 0, 0}}, {0}, {0})));
}

TEST(IsStronglyUnambiguous, ImpliesUnambiguousWhenStronglyConnected) {
    std::mt19937 rng(22);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 100; ++i) {
        Automaton a = oracle::random_automaton(rng, 2 + i % 4, 2, 0.35);
        if (!strongly_connected(a)) continue;
        ++checked;
        Verdict s = is_strongly_unambiguous(a);
        if (s) {
            EXPECT_TRUE(is_unambiguous(a)) << serialize(a);
        }
        if (!s) {
            EXPECT_TRUE(replays(a, s.paths)) << serialize(a);
        }
    }
    EXPECT_GT(checked, 20);
}

TEST(IsStronglyUnambiguous, TwoDistinctBiInfinitePathsWhenFalse) {
    std::mt19937 rng(23);
    for (int i = 0; i < 150; ++i) {
        Automaton a = oracle::random_automaton(rng, 1 + i % 4, 2, 0.3);
        Verdict s = is_strongly_unambiguous(a);
        if (s) continue;
        ASSERT_TRUE(replays(a, s.paths));
        if (s.kind == WitnessKind::pair_cycle) {
            EXPECT_EQ(s.paths.first.front(), s.paths.first.back());
            EXPECT_EQ(s.paths.second.front(), s.paths.second.back());
        } else {
            EXPECT_EQ(s.kind, WitnessKind::two_finite_paths);
            EXPECT_TRUE(ends_agree(s.paths));
        }
    }
}

TEST(UnambiguousOnSofic, SubshiftOfFiniteTypeExample) {
    EXPECT_TRUE(unambiguous_on_sofic(even(), efg()));
}

TEST(UnambiguousOnSofic, FullEdgeShiftOfEvenShiftIsAmbiguous) {
    Verdict v = unambiguous_on_sofic(even(), edge_shift(even()));
    ASSERT_FALSE(v);
    EXPECT_EQ(v.kind, WitnessKind::relative_pair_path);
    EXPECT_TRUE(replays(even(), v.paths));
    for (Symbol x : v.paths.label) EXPECT_EQ(x, ab.symbol('b'));
}

TEST(UnambiguousOnSofic, EdgeShiftAgreesWithStrongUnambiguity) {
    std::mt19937 rng(24);
    for (int i = 0; i < 120; ++i) {
        Automaton a = oracle::random_automaton(rng, 1 + i % 4, 2, 0.3);
        if (a.edges().empty()) continue;
        Verdict rel = unambiguous_on_sofic(a, edge_shift(a));
        ASSERT_EQ(rel.holds, is_strongly_unambiguous(a).holds) << serialize(a);
        if (!rel) {
            ASSERT_TRUE(replays(a, rel.paths)) << serialize(a);
        }
    }
}

TEST(UnambiguousOnSofic, AlphabetMismatch) {
    EXPECT_THROW(unambiguous_on_sofic(even(), golden()), InputError);
}

TEST(RelabeledSft, FigureExample) {
    Verdict v = unambiguous_on_sft_relabel(efg(), {0, 1, 1}, ab);
    EXPECT_TRUE(v);
    EXPECT_EQ(v.holds, unambiguous_on_sofic(even(), efg()).holds);
}

TEST(RelabeledSft, IdentityAndCollapse) {
    Automaton cycle(Alphabet::indexed(2), 2, {{0, 0, 1}, {1, 1, 0}}, {0, 1}, {0, 1});
    EXPECT_TRUE(unambiguous_on_sft_relabel(cycle, {0, 1}, Alphabet::indexed(2)));
    Verdict collapsed = unambiguous_on_sft_relabel(cycle, {0, 0}, Alphabet("a"));
    EXPECT_FALSE(collapsed);
}

TEST(RelabeledSft, RequiresStrongUnambiguity) {
    EXPECT_THROW(unambiguous_on_sft_relabel(even(), {0, 1}, ab), InputError);
}

TEST(Replays, RejectsForgedWitnesses) {
    PathPair same{ab.word("b"), {0, 1}, {0, 1}};
    EXPECT_FALSE(replays(even(), same));
    PathPair missing{ab.word("a"), {1, 1}, {0, 0}};
    EXPECT_FALSE(replays(even(), missing));
}

TEST(RecurrentStrongUnambiguity, FirstReturnsOfEvenCode) {
    // (b,1) <-> (b,0) carries b^Z twice, but only once through the anchor.
    Automaton a(ab, 3, {{0, 0, 0}, {0, 1, 1}, {1, 1, 2}, {2, 1, 1}, {2, 0, 0}}, {0}, {0});
    EXPECT_FALSE(is_strongly_unambiguous(a));
    EXPECT_TRUE(is_strongly_unambiguous_recurrent(a, 0));
    Automaton twice(ab, 2, {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}}, {0}, {0});
    EXPECT_FALSE(is_strongly_unambiguous_recurrent(twice, 0));
}
