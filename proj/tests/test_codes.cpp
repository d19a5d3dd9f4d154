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

std::string show(const Word& w) { return w.empty() ? "~" : ab.str(w); }

}  // namespace

TEST(IsCode, Examples) {
    EXPECT_TRUE(is_code(Code(ab, {"ab", "ba"})));
    EXPECT_TRUE(is_code(Code(ab, {"b", "aa"})));
    Verdict v = is_code(Code(ab, {"a", "ab", "ba"}));
    ASSERT_FALSE(v);
    EXPECT_EQ(v.kind, WitnessKind::factorizations);
    EXPECT_EQ(ab.str(v.words.at(0)), "aba");
    ASSERT_EQ(v.factorizations.size(), 2u);
    for (const auto& f : v.factorizations) {
        Word joined;
        for (const Word& w : f) joined = concat(joined, w);
        EXPECT_EQ(joined, v.words[0]);
    }
    EXPECT_NE(v.factorizations[0], v.factorizations[1]);
}

TEST(IsCode, RejectsEmptyAndDuplicateWords) {
    EXPECT_THROW(Code(ab, {"a", "a"}), InputError);
    EXPECT_THROW(Code(ab, {Word{}}), InputError);
}

TEST(IsCode, AgreesWithFactorizationCounting) {
    std::mt19937 rng(10);
    int non_codes = 0;
    for (int i = 0; i < 300; ++i) {
        auto words = oracle::random_word_set(rng, 2, 4, 4, 12);
        Verdict v = is_code(Code(ab, words));
        ASSERT_EQ(v.holds, !oracle::double_factorization(words, 12).has_value()) << Code(ab, words).str();
        if (!v) {
            ++non_codes;
            EXPECT_GE(oracle::factorizations(words, v.words[0]), 2u);
        }
    }
    EXPECT_GT(non_codes, 20);
}

TEST(IsCode, FiniteAndRationalRoutesAgree) {
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        Code c(ab, oracle::random_word_set(rng, 2, 4, 4, 10));
        ASSERT_EQ(is_code(c).holds, is_code(c.expression()).holds) << c.str();
    }
}

TEST(IsPrefixCode, Examples) {
    EXPECT_TRUE(is_prefix_code(Code(ab, {"a", "bb"})));
    EXPECT_TRUE(is_prefix_code(Code(ab, {"aba"})));
    Verdict v = is_prefix_code(Code(ab, {"a", "ab"}));
    ASSERT_FALSE(v);
    EXPECT_EQ(v.kind, WitnessKind::word_pair);
    EXPECT_EQ(ab.str(v.words.at(0)), "a");
    EXPECT_EQ(ab.str(v.words.at(1)), "ab");
}

TEST(IsPrefixCode, PrefixCodesAreCodes) {
    std::mt19937 rng(12);
    for (int i = 0; i < 300; ++i) {
        Code c(ab, oracle::random_word_set(rng, 2, 5, 4, 12));
        ASSERT_EQ(is_prefix_code(c).holds, oracle::is_prefix_set(c.words()));
        if (is_prefix_code(c)) {
            ASSERT_TRUE(is_code(c)) << c.str();
        }
    }
}

TEST(StarAutomaton, Examples) {
    Dfa abba = star_min_automaton(Code(ab, {"ab", "ba"}));
    EXPECT_EQ(abba.size(), 3u);
    Dfa a = star_min_automaton(Code(ab, {"a"}));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a.next(0, 0), 0u);
    EXPECT_EQ(a.next(0, 1), kNoState);
    Dfa even = star_min_automaton(parse_expression("(bb)*a", ab));
    Dfa expected(ab, 3, 0, {true, false, false});
    expected.set(0, 0, 0);
    expected.set(0, 1, 1);
    expected.set(1, 1, 2);
    expected.set(2, 1, 1);
    expected.set(2, 0, 0);
    EXPECT_TRUE(isomorphic(even, expected));
}

TEST(StarAutomaton, AcceptsExactlyConcatenations) {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        auto words = oracle::random_word_set(rng, 2, 4, 4, 10);
        Dfa d = star_min_automaton(Code(ab, words));
        for (const Word& w : oracle::all_words_upto(2, 10)) ASSERT_EQ(d.accepts(w), oracle::in_star(words, w));
    }
}

TEST(IsCircular, Examples) {
    EXPECT_TRUE(is_circular(Code(ab, {"ab", "a"})));
    Verdict abba = is_circular(Code(ab, {"ab", "ba"}));
    ASSERT_FALSE(abba);
    EXPECT_EQ(show(abba.words.at(0)), "a");
    EXPECT_EQ(show(abba.words.at(1)), "b");
    Verdict even = is_circular(Code(ab, {"a", "bb"}));
    ASSERT_FALSE(even);
    EXPECT_EQ(show(even.words.at(0)), "b");
    EXPECT_EQ(show(even.words.at(1)), "b");
}

TEST(IsCircular, RequiresACode) { EXPECT_THROW(is_circular(Code(ab, {"a", "ab", "ba"})), InputError); }

TEST(IsCircular, AgreesWithExhaustiveSearch) {
    std::mt19937 rng(14);
    int checked = 0, circular = 0;
    while (checked < 120) {
        auto words = oracle::random_word_set(rng, 2, 4, 4, 10);
        if (oracle::double_factorization(words, 14)) continue;
        Code c(ab, words);
        ++checked;
        Verdict v = is_circular(c);
        // The search is bounded, so it can only refute circularity.
        if (oracle::circular_violation(words, 2, 8)) {
            ASSERT_FALSE(v) << c.str();
        }
        if (v) {
            ++circular;
            continue;
        }
        const Word& u = v.words.at(0);
        const Word& w = v.words.at(1);
        EXPECT_TRUE(oracle::in_star(words, concat(u, w))) << c.str();
        EXPECT_TRUE(oracle::in_star(words, concat(w, u))) << c.str();
        EXPECT_FALSE(oracle::in_star(words, u) && oracle::in_star(words, w)) << c.str();
    }
    EXPECT_GT(circular, 10);
}

TEST(IsCircular, WitnessBeyondShortSearch) {
    Code c(ab, {"bab", "abba"});
    Verdict v = is_circular(c);
    ASSERT_FALSE(v);
    EXPECT_EQ(show(v.words.at(0)) + "|" + show(v.words.at(1)), "ab|bababbab");
    EXPECT_TRUE(oracle::in_star(c.words(), concat(v.words[0], v.words[1])));
    EXPECT_TRUE(oracle::in_star(c.words(), concat(v.words[1], v.words[0])));
}

TEST(IsCircular, RationalRouteAgreesOnFiniteCodes) {
    std::mt19937 rng(15);
    int checked = 0;
    while (checked < 80) {
        Code c(ab, oracle::random_word_set(rng, 2, 4, 4, 10));
        if (!is_code(c)) continue;
        ++checked;
        ASSERT_EQ(is_circular(c).holds, is_circular(c.expression()).holds) << c.str();
    }
}

TEST(IsVeryThin, Examples) {
    Code even(ab, {"a", "bb"});
    Verdict v = is_very_thin(even);
    ASSERT_TRUE(v);
    const Word& w = v.words.at(0);
    EXPECT_TRUE(oracle::in_star(even.words(), w));
    for (const Word& c : even.words()) EXPECT_FALSE(is_factor(w, c));
    EXPECT_TRUE(is_very_thin(dyck_code(3)));
    EXPECT_TRUE(is_very_thin(parse_expression("a(ba)*ab(ab)*b", ab)));
}

TEST(IsVeryThin, FullStarIsNotVeryThin) {
    Verdict v = is_very_thin(parse_expression("(a|b)(a|b)*", ab));
    EXPECT_FALSE(v);
}

TEST(Dyck, DepthOneAndTwo) {
    EXPECT_EQ(dyck_code(1).str(), "{aA,bB}");
    EXPECT_EQ(dyck_code(2).str(), "{aA,bB,aaAA,abBA,baAB,bbBB}");
    EXPECT_THROW(dyck_code(0), InputError);
}

TEST(Dyck, WordsAreBalanced) {
    Code d = dyck_code(4);
    for (const Word& w : d.words()) {
        std::vector<Symbol> stack;
        for (Symbol x : w) {
            if (x < 2) {
                stack.push_back(x);
            } else {
                ASSERT_FALSE(stack.empty());
                ASSERT_EQ(stack.back() + 2, x);
                stack.pop_back();
            }
        }
        EXPECT_TRUE(stack.empty());
    }
}

TEST(Dyck, NoProperSuffixIsAPrefixOfTheStar) {
    Code d = dyck_code(3);
    const auto& words = d.words();
    // s is a prefix of D* iff s = x y with x in D* and y a prefix of a word of D.
    auto prefix_of_star = [&](const Word& s) {
        for (std::size_t cut = 0; cut <= s.size(); ++cut) {
            if (!oracle::in_star(words, slice(s, 0, cut))) continue;
            Word y = slice(s, cut, s.size());
            for (const Word& w : words)
                if (is_prefix(y, w)) return true;
        }
        return false;
    };
    for (const Word& w : words)
        for (std::size_t i = 1; i < w.size(); ++i) EXPECT_FALSE(prefix_of_star(slice(w, i, w.size())));
}

TEST(Devolder, Truncations) {
    EXPECT_EQ(devolder_code(1).str(), "{ab,ababb}");
    EXPECT_EQ(devolder_code(2).str(), "{ab,ababb,abbabbb}");
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(is_circular(devolder_code(n))) << n;
}
