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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "codedshift/cli.hpp"
#include "codedshift/codedshift.hpp"

using namespace codedshift;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    for (auto& a : args)
        if (a.rfind("data/", 0) == 0) a = std::string(CODEDSHIFT_DATA_DIR) + a.substr(4);
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::map<std::string, std::string> porcelain(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        auto eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

struct GoldenCase {
    const char* name;
    std::vector<std::string> args;
};

const std::vector<GoldenCase> golden_cases = {
    {"check_code_even", {"check", "code", "data/even.code", "--porcelain"}},
    {"check_code_abba", {"check", "code", "data/abba.code", "--porcelain"}},
    {"check_strong_even", {"check", "strongly-unambiguous", "data/even.aut", "--porcelain"}},
    {"check_relative_efg", {"check", "relative", "data/even.aut", "data/sft_efg.aut", "--porcelain"}},
    {"recode_abba", {"recode", "data/abba.code", "--porcelain"}},
    {"fischer_even", {"fischer", "data/even.aut", "a"}},
    {"bouquet_fibonacci", {"morphism", "bouquet", "data/fibonacci.morphism"}},
    {"circular_thue_morse", {"morphism", "circular", "data/thue_morse.morphism", "--porcelain"}},
    {"recognizable_thue_morse", {"morphism", "recognizable", "data/thue_morse.morphism", "--window", "5", "--porcelain"}},
    {"fiebig_golden", {"fiebig", "data/golden.aut", "--radius", "6"}},
    {"beta_period_10_dot", {"beta", "--period", "10", "--dot"}},
    {"sft_bb", {"sft", "--forbidden", "bb", "--alphabet", "ab"}},
    {"blockmap_golden", {"blockmap", "data/golden.aut", "data/golden_to_even.map"}},
};

}  // namespace

TEST(Cli, CheckCodeEven) {
    CliResult r = run({"--porcelain", "check", "code", "data/even.code"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto kv = porcelain(r.out);
    EXPECT_EQ(kv["prefix"], "true");
    EXPECT_EQ(kv["code"], "true");
    EXPECT_EQ(kv["circular"], "false");
    EXPECT_EQ(kv["synchronized"], "true");
    EXPECT_EQ(kv["constant"], "a");
}

TEST(Cli, PorcelainAfterTheSubcommand) {
    CliResult before = run({"--porcelain", "check", "code", "data/even.code"});
    CliResult after = run({"check", "code", "data/even.code", "--porcelain"});
    EXPECT_EQ(before.out, after.out);
    CliResult human = run({"check", "code", "data/even.code"});
    EXPECT_NE(human.out.find("prefix: true"), std::string::npos) << human.out;
}

TEST(Cli, RecodeAbBa) {
    CliResult r = run({"recode", "data/abba.code", "--porcelain"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto kv = porcelain(r.out);
    EXPECT_EQ(kv["constant"], "bb");
    RationalExpression c = parse_expression(kv["C'"], Alphabet("ab"));
    EXPECT_TRUE(equivalent(c, parse_expression("a(ba)*ab(ab)*b", Alphabet("ab")))) << kv["C'"];
}

TEST(Cli, BetaDot) {
    CliResult r = run({"beta", "--period", "10", "--dot"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"check", "code", "data/missing.code"}).status, 1);
    EXPECT_EQ(run({"frobnicate"}).status, 1);
    EXPECT_EQ(run({}).status, 1);
    CliResult bad = run({"beta", "--period", "00"});
    EXPECT_EQ(bad.status, 1);
    EXPECT_NE(bad.err.find("all-zero period"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"recode", "data/fibonacci.code"}).status, 1);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, GoldenOutputs) {
    const bool update = std::getenv("CODEDSHIFT_UPDATE_GOLDEN") != nullptr;
    for (const auto& c : golden_cases) {
        CliResult r = run(c.args);
        ASSERT_EQ(r.status, 0) << c.name << ": " << r.err;
        std::string path = std::string(CODEDSHIFT_GOLDEN_DIR) + "/" + c.name + ".txt";
        if (update) {
            std::ofstream(path) << r.out;
            continue;
        }
        std::ifstream in(path);
        ASSERT_TRUE(in) << "missing golden file " << path;
        std::stringstream expected;
        expected << in.rdbuf();
        EXPECT_EQ(r.out, expected.str()) << c.name;
    }
}
