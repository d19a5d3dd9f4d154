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
// Decision results with machine-checkable witnesses.

#pragma once

#include <string>
#include <vector>

#include "codedshift/core.hpp"

namespace codedshift {

enum class WitnessKind {
    none,
    word,                // a single word (e.g. a constant or a thinness witness)
    word_pair,           // (u, v) or an offending pair of code words
    factorizations,      // one word with two factorizations
    two_finite_paths,    // two distinct paths with the same label and endpoints
    pair_cycle,          // two distinct cycles with the same label
    relative_pair_path,  // a path of the relative-unambiguity graph
    state_set,           // a set of states (component, subset)
};

inline const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::none: return "none";
        case WitnessKind::word: return "word";
        case WitnessKind::word_pair: return "word-pair";
        case WitnessKind::factorizations: return "factorizations";
        case WitnessKind::two_finite_paths: return "two-finite-paths";
        case WitnessKind::pair_cycle: return "pair-cycle";
        case WitnessKind::relative_pair_path: return "relative-pair-path";
        case WitnessKind::state_set: return "state-set";
    }
    return "unknown";
}

/// Two equally labeled paths, given by their state sequences.
struct PathPair {
    Word label;
    std::vector<State> first;
    std::vector<State> second;
};

struct Verdict {
    bool holds = true;
    WitnessKind kind = WitnessKind::none;
    std::vector<Word> words;
    std::vector<std::vector<Word>> factorizations;
    PathPair paths;
    std::vector<State> states;
    std::string detail;

    explicit operator bool() const { return holds; }

    static Verdict yes(std::string detail = {}) {
        Verdict v;
        v.detail = std::move(detail);
        return v;
    }

    static Verdict no(WitnessKind kind) {
        Verdict v;
        v.holds = false;
        v.kind = kind;
        return v;
    }
};

}  // namespace codedshift
