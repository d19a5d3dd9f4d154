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

Morphism fibonacci() { return Morphism::endo(ab, {"ab", "a"}); }
Morphism thue_morse() { return Morphism::endo(ab, {"ab", "ba"}); }

std::set<Word> as_set(const WordSet& w) { return {w.begin(), w.end()}; }

}  // namespace

TEST(Morphism, RejectsEmptyImagesAndArityMismatch) {
    EXPECT_THROW(Morphism::endo(ab, {"ab", ""}), InputError);
    EXPECT_THROW(Morphism::endo(ab, {"ab"}), InputError);
}

TEST(Bouquet, FibonacciShape) {
    Automaton a = bouquet(fibonacci());
    EXPECT_EQ(a.size(), 2u);
    EXPECT_EQ(a.edges().size(), 3u);
    EXPECT_TRUE(oracle::accepts(a, ab.word("aba")));
    EXPECT_FALSE(oracle::accepts(a, ab.word("b")));
}

TEST(Bouquet, StateAndEdgeCounts) {
    std::mt19937 rng(50);
    for (int i = 0; i < 50; ++i) {
        auto words = oracle::random_word_set(rng, 2, 2, 5, 10);
        if (words.size() != 2) continue;
        Morphism m(ab, ab, words);
        Automaton a = bouquet(m);
        EXPECT_EQ(a.edges().size(), m.total_length());
        EXPECT_EQ(a.size(), 1 + m.total_length() - 2);
        for (Symbol b = 0; b < 2; ++b)
            for (std::size_t j = 0; j < m.image(b).size(); ++j)
                EXPECT_EQ(a.edge(m.edge_index(b, j)).label, m.image(b)[j]);
    }
}

TEST(Primitive, Examples) {
    Verdict f = is_primitive(fibonacci());
    ASSERT_TRUE(f);
    EXPECT_EQ(f.detail, "n=2");
    Verdict t = is_primitive(thue_morse());
    ASSERT_TRUE(t);
    EXPECT_EQ(t.detail, "n=1");
    EXPECT_FALSE(is_primitive(Morphism::endo(ab, {"aa", "bb"})));
    EXPECT_THROW(is_primitive(Morphism(ab, Alphabet("a"), {Word{0}, Word{0}})), InputError);
}

TEST(MorphicLanguage, ThueMorseIsCubeFreeOfLetters) {
    auto lang = morphic_language(thue_morse(), 5);
    EXPECT_TRUE(lang.stabilized);
    for (const Word& w : lang.words) {
        EXPECT_FALSE(is_factor(ab.word("aaa"), w));
        EXPECT_FALSE(is_factor(ab.word("bbb"), w));
    }
    for (const Word& w : lang.words)
        if (w.size() == 5) {
            EXPECT_TRUE(is_factor(ab.word("aa"), w) || is_factor(ab.word("bb"), w)) << ab.str(w);
        }
}

TEST(MorphicLanguage, FibonacciSmallLengths) {
    std::set<Word> two;
    for (const Word& w : morphic_language(fibonacci(), 2).words)
        if (w.size() == 2) two.insert(w);
    EXPECT_EQ(two, (std::set<Word>{ab.word("aa"), ab.word("ab"), ab.word("ba")}));
    EXPECT_EQ(as_set(morphic_language(fibonacci(), 0).words), std::set<Word>{Word{}});
}

TEST(MorphicLanguage, FactorClosedAndMatchesIterates) {
    for (const Morphism& m : {fibonacci(), thue_morse(), Morphism::endo(ab, {"ab", "aa"})}) {
        auto lang = morphic_language(m, 6);
        ASSERT_TRUE(lang.stabilized);
        for (const Word& w : lang.words)
            for (std::size_t i = 0; i < w.size(); ++i) {
                EXPECT_TRUE(lang.words.count(slice(w, i + 1, w.size())));
                EXPECT_TRUE(lang.words.count(slice(w, 0, i)));
            }
        std::set<Word> iterated{Word{}};
        for (Symbol x = 0; x < 2; ++x) {
            Word big = m.power(Word{x}, 12);
            for (std::size_t i = 0; i < big.size(); ++i)
                for (std::size_t j = i + 1; j <= big.size() && j - i <= 6; ++j) iterated.insert(slice(big, i, j));
        }
        EXPECT_EQ(as_set(lang.words), iterated);
    }
}

TEST(CircularMorphism, Examples) {
    EXPECT_TRUE(is_circular_morphism(fibonacci()));
    EXPECT_FALSE(is_circular_morphism(thue_morse()));
    Morphism doubling = Morphism::endo(ab, {"ab", "aa"});
    Verdict v = is_circular_morphism(doubling);
    ASSERT_FALSE(v);
    const Word& u = v.words.at(0);
    const Word& w = v.words.at(1);
    EXPECT_TRUE(oracle::in_star(doubling.images(), concat(u, w)));
    EXPECT_TRUE(oracle::in_star(doubling.images(), concat(w, u)));
    EXPECT_FALSE(oracle::in_star(doubling.images(), u) && oracle::in_star(doubling.images(), w));
    EXPECT_THROW(is_circular_morphism(Morphism::endo(ab, {"ab", "ab"})), InputError);
}

TEST(CircularMorphism, AgreesWithExhaustiveSearch) {
    std::mt19937 rng(51);
    int checked = 0;
    while (checked < 80) {
        auto words = oracle::random_word_set(rng, 2, 2, 4, 8);
        if (words.size() != 2 || oracle::double_factorization(words, 12)) continue;
        ++checked;
        Morphism m(ab, ab, words);
        ASSERT_EQ(is_circular_morphism(m).holds, !oracle::circular_violation(words, 2, 8).has_value())
            << ab.str(words[0]) << "," << ab.str(words[1]);
    }
}

TEST(Recognizability, SoundYesExamples) {
    EXPECT_EQ(recognizability_bounded(thue_morse(), 5).detail, "sound-yes");
    EXPECT_EQ(recognizability_bounded(fibonacci(), 3).detail, "sound-yes");
}

TEST(Recognizability, PeriodicImageIsInconclusive) {
    Verdict v = recognizability_bounded(Morphism::endo(Alphabet("a"), {"aa"}), 3);
    EXPECT_FALSE(v);
    EXPECT_EQ(v.detail.rfind("inconclusive", 0), 0u);
    EXPECT_THROW(recognizability_bounded(fibonacci(), 1), InputError);
}

TEST(Indecomposable, TwoLetterExamples) {
    EXPECT_TRUE(is_indecomposable_two_letter(fibonacci()));
    EXPECT_TRUE(is_indecomposable_two_letter(thue_morse()));
    EXPECT_FALSE(is_indecomposable_two_letter(Morphism::endo(ab, {"ab", "abab"})));
    EXPECT_FALSE(is_indecomposable_two_letter(Morphism::endo(ab, {"a", "aa"})));
    EXPECT_THROW(is_indecomposable_two_letter(Morphism::endo(Alphabet("abc"), {"a", "b", "c"})), InputError);
}
