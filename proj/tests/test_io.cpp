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

#include "codedshift/codedshift.hpp"

using namespace codedshift;

namespace {

std::string data(const std::string& name) { return read_file(std::string(CODEDSHIFT_DATA_DIR) + "/" + name); }

template <class F>
std::string error_of(F&& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(AutomatonText, RoundTripOnSamples) {
    for (const char* file : {"even.aut", "golden.aut", "sft_efg.aut", "full_edges.aut"}) {
        Automaton a = parse_automaton(data(file));
        std::string text = serialize(a);
        Automaton b = parse_automaton(text);
        EXPECT_EQ(serialize(b), text) << file;
        EXPECT_EQ(b.size(), a.size());
        EXPECT_EQ(b.edges().size(), a.edges().size());
    }
}

TEST(AutomatonText, DefaultsAndComments) {
    Automaton a = parse_automaton("# comment\n@alphabet ab\n0 a 1  # trailing\n\n1 b 0\n");
    EXPECT_EQ(a.size(), 2u);
    EXPECT_EQ(a.initial().size(), 2u);
    EXPECT_EQ(a.terminal().size(), 2u);
    Automaton b = parse_automaton("@alphabet ab\n@states 3\n@initial 0\n@terminal 2\n0 a 2\n");
    EXPECT_EQ(b.size(), 3u);
    EXPECT_EQ(b.initial(), std::vector<State>{0});
}

TEST(AutomatonText, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_of([] { parse_automaton("@alphabet ab\n0 c 1\n"); }), "line 2: invalid character 'c'");
    EXPECT_EQ(error_of([] { parse_automaton("@alphabet ab\n0 a 1\n0 a 1\n"); }), "line 3: duplicate edge '0 a 1'");
    EXPECT_EQ(error_of([] { parse_automaton("0 a 1\n"); }), "line 1: edge before @alphabet");
    EXPECT_EQ(error_of([] { parse_automaton("@alphabet ab\n@bogus\n"); }), "line 2: unknown directive '@bogus'");
    EXPECT_EQ(error_of([] { parse_automaton("@alphabet ab\nx a 1\n"); }), "line 2: expected a state number, got 'x'");
    EXPECT_FALSE(error_of([] { parse_automaton("@alphabet ab\n@states 1\n0 a 3\n"); }).empty());
}

TEST(CodeText, WordsAndExpressions) {
    auto even = parse_code(data("even.code"));
    ASSERT_TRUE(std::holds_alternative<Code>(even));
    EXPECT_EQ(std::get<Code>(even).str(), "{a,bb}");
    auto e = parse_code("@alphabet ab\n(bb)*a\n");
    ASSERT_TRUE(std::holds_alternative<RationalExpression>(e));
    EXPECT_TRUE(equivalent(std::get<RationalExpression>(e), parse_expression("(bb)*a", Alphabet("ab"))));
    for (const char* file : {"even.code", "abba.code", "fibonacci.code"}) {
        Code c = std::get<Code>(parse_code(data(file)));
        EXPECT_EQ(std::get<Code>(parse_code(serialize(c))).str(), c.str()) << file;
    }
}

TEST(CodeText, DuplicateWordIsReportedAtItsLine) {
    EXPECT_EQ(error_of([] { parse_code("ab\nab\n"); }), "line 2: duplicate word 'ab'");
    EXPECT_EQ(error_of([] { parse_code("@alphabet ab\nac\n"); }), "line 2: invalid character 'c'");
    EXPECT_FALSE(error_of([] { parse_code("# nothing\n"); }).empty());
}

TEST(MorphismText, ThueMorse) {
    Morphism m = parse_morphism(data("thue_morse.morphism"));
    EXPECT_TRUE(m.is_endomorphism());
    EXPECT_EQ(m.source().chars(), "ab");
    EXPECT_EQ(m.target().str(m.image(0)), "ab");
    EXPECT_EQ(m.target().str(m.image(1)), "ba");
    Morphism again = parse_morphism(serialize(m));
    EXPECT_EQ(again.images(), m.images());
}

TEST(MorphismText, Errors) {
    EXPECT_EQ(error_of([] { parse_morphism("a -> ab\na -> b\n"); }), "line 2: letter 'a' has two images");
    EXPECT_EQ(error_of([] { parse_morphism("a => ab\n"); }), "line 1: expected 'b -> word'");
    EXPECT_EQ(error_of([] { parse_morphism("@alphabet ab\na -> ab\n"); }), "no image for letter 'b'");
}

TEST(BlockMapText, GoldenToEven) {
    Alphabet ab("ab");
    BlockMap f = parse_block_map(data("golden_to_even.map"), ab);
    EXPECT_EQ(f.left, 0u);
    EXPECT_EQ(f.right, 1u);
    EXPECT_EQ(f.table.size(), 3u);
    BlockMap g = parse_block_map(serialize(f, ab), ab);
    EXPECT_EQ(g.table, f.table);
    EXPECT_EQ(error_of([&] { parse_block_map("ab -> a\nb -> a\n", ab); }), "line 2: block 'b' does not have length 2");
    EXPECT_EQ(error_of([&] { parse_block_map("ab -> a\nab -> b\n", ab); }), "line 2: duplicate block 'ab'");
}

TEST(Dot, DeterministicAndMergesParallelEdges) {
    Automaton a = parse_automaton("@alphabet ab\n0 b 0\n0 a 0\n0 a 1\n");
    std::string dot = to_dot(a);
    EXPECT_EQ(dot, to_dot(parse_automaton(serialize(a))));
    EXPECT_NE(dot.find("0 -> 0 [label=\"a,b\"]"), std::string::npos) << dot;
    EXPECT_NE(dot.find("0 -> 1 [label=\"a\"]"), std::string::npos) << dot;
}
