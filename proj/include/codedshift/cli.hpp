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
// Command-line front end. Exit codes: 0 when a verdict or construction was
// produced, 1 on input errors, 2 on internal invariant violations.

#pragma once

#include <CLI11.hpp>

#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "codedshift/codes.hpp"
#include "codedshift/countable.hpp"
#include "codedshift/io.hpp"
#include "codedshift/morphisms.hpp"
#include "codedshift/shifts.hpp"
#include "codedshift/sync_recode.hpp"
#include "codedshift/unambiguity.hpp"

namespace codedshift::cli {

/// Ordered key/value lines; `key=value` with --porcelain, `key: value` otherwise.
class Report {
public:
    void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }

    void print(std::ostream& out, bool porcelain) const {
        for (const auto& [k, v] : lines_) out << k << (porcelain ? "=" : ": ") << v << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

namespace detail {

inline std::string word_or_eps(const Alphabet& a, const Word& w) { return w.empty() ? "~" : a.str(w); }

inline std::string states(const Automaton& a, const std::vector<State>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += " ";
        out += a.name(path[i]);
    }
    return out;
}

inline void witness(Report& r, const std::string& key, const Verdict& v, const Automaton* a, const Alphabet& alphabet) {
    r.add(key + ".witness", std::string(to_string(v.kind)));
    switch (v.kind) {
        case WitnessKind::word_pair:
            r.add(key + ".u", word_or_eps(alphabet, v.words.at(0)));
            r.add(key + ".v", word_or_eps(alphabet, v.words.at(1)));
            break;
        case WitnessKind::factorizations:
            r.add(key + ".word", alphabet.str(v.words.at(0)));
            for (std::size_t i = 0; i < v.factorizations.size(); ++i) {
                std::string f;
                for (std::size_t j = 0; j < v.factorizations[i].size(); ++j) {
                    if (j) f += ".";
                    f += alphabet.str(v.factorizations[i][j]);
                }
                r.add(key + ".factorization" + std::to_string(i + 1), f);
            }
            break;
        case WitnessKind::two_finite_paths:
        case WitnessKind::pair_cycle:
        case WitnessKind::relative_pair_path:
            r.add(key + ".label", word_or_eps(alphabet, v.paths.label));
            if (a) {
                r.add(key + ".path1", states(*a, v.paths.first));
                r.add(key + ".path2", states(*a, v.paths.second));
            }
            break;
        case WitnessKind::word:
            r.add(key + ".word", word_or_eps(alphabet, v.words.at(0)));
            break;
        case WitnessKind::state_set:
        case WitnessKind::none:
            break;
    }
    if (!v.detail.empty()) r.add(key + ".detail", v.detail);
}

inline CodeInput load_code(const std::string& path) { return parse_code(read_file(path)); }
inline Automaton load_automaton(const std::string& path) { return parse_automaton(read_file(path)); }

inline RationalExpression as_expression(const CodeInput& c) {
    if (auto code = std::get_if<Code>(&c)) return code->expression();
    return std::get<RationalExpression>(c);
}

inline const Alphabet& alphabet_of(const CodeInput& c) {
    if (auto code = std::get_if<Code>(&c)) return code->alphabet();
    return std::get<RationalExpression>(c).alphabet();
}

inline Verdict code_verdict(const CodeInput& c) {
    if (auto code = std::get_if<Code>(&c)) return is_code(*code);
    return is_code(std::get<RationalExpression>(c));
}

inline Verdict prefix_verdict(const CodeInput& c) {
    if (auto code = std::get_if<Code>(&c)) return is_prefix_code(*code);
    return is_prefix_code(code_dfa(std::get<RationalExpression>(c)));
}

inline Verdict circular_verdict(const CodeInput& c) {
    if (auto code = std::get_if<Code>(&c)) return is_circular(*code);
    return is_circular(std::get<RationalExpression>(c));
}

inline void report_code(Report& r, const CodeInput& c, std::size_t max_len) {
    const Alphabet& a = alphabet_of(c);
    Verdict prefix = prefix_verdict(c);
    r.add("prefix", prefix.holds);
    if (!prefix) witness(r, "prefix", prefix, nullptr, a);
    Verdict code = code_verdict(c);
    r.add("code", code.holds);
    if (!code) {
        witness(r, "code", code, nullptr, a);
        r.add("circular", std::string("undefined"));
        r.add("circular.detail", std::string("not a code"));
    } else {
        Verdict circ = circular_verdict(c);
        r.add("circular", circ.holds);
        if (!circ) witness(r, "circular", circ, nullptr, a);
    }
    if (!prefix) {
        r.add("synchronized", false);
        r.add("synchronized.detail", std::string("not a prefix code"));
        return;
    }
    Dfa star = star_min_automaton(as_expression(c));
    auto constant = find_constant(star, max_len);
    r.add("synchronized", constant.has_value());
    if (constant) {
        r.add("constant", word_or_eps(a, constant->word));
        r.add("constant.sink", std::to_string(constant->sink));
    } else {
        r.add("synchronized.detail", "no constant up to length " +
                                         std::to_string(max_len ? max_len : 2 * star.size() * star.size()));
    }
}

inline void emit_automaton(std::ostream& out, const Automaton& a, bool dot, const std::vector<bool>& marks = {}) {
    if (dot)
        out << to_dot(a, marks);
    else
        out << serialize(a);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Codes, automata and coded shifts", "codedshift"};
    app.require_subcommand(1);
    app.fallthrough();
    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "Machine-readable key=value output");

    std::string file, file2, word, mode = "reversible", preperiod, period, forbidden, alphabet_chars;
    std::size_t max_len = 0, radius = 20, window_k = 5;
    bool dot = false;

    auto* check = app.add_subcommand("check", "Decide a property")->require_subcommand(1);
    std::function<void()> action;
    auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<void()> f) {
        auto* sub = parent->add_subcommand(name, help);
        sub->callback([&action, f] { action = f; });
        return sub;
    };
    auto emit = [&](const Report& r) { r.print(out, porcelain); };

    verb(check, "code", "Prefix, code, circular and synchronized verdicts", [&] {
        Report r;
        detail::report_code(r, detail::load_code(file), max_len);
        emit(r);
    })->add_option("file", file, "Code file")->required();
    check->get_subcommand("code")->add_option("--max-len", max_len, "Longest constant searched");

    verb(check, "prefix", "Prefix code test", [&] {
        auto c = detail::load_code(file);
        Verdict v = detail::prefix_verdict(c);
        Report r;
        r.add("prefix", v.holds);
        if (!v) detail::witness(r, "prefix", v, nullptr, detail::alphabet_of(c));
        emit(r);
    })->add_option("file", file, "Code file")->required();

    verb(check, "circular", "Circular code test", [&] {
        auto c = detail::load_code(file);
        Verdict v = detail::circular_verdict(c);
        Report r;
        r.add("circular", v.holds);
        if (!v) detail::witness(r, "circular", v, nullptr, detail::alphabet_of(c));
        emit(r);
    })->add_option("file", file, "Code file")->required();

    verb(check, "very-thin", "Some word of C* is not a factor of C", [&] {
        auto c = detail::load_code(file);
        Verdict v = is_very_thin(detail::as_expression(c));
        Report r;
        r.add("very-thin", v.holds);
        if (v)
            r.add("very-thin.word", detail::word_or_eps(detail::alphabet_of(c), v.words.at(0)));
        else
            r.add("very-thin.detail", v.detail);
        emit(r);
    })->add_option("file", file, "Code file")->required();

    verb(check, "unambiguous", "At most one path per label and endpoints", [&] {
        Automaton a = detail::load_automaton(file);
        Verdict v = is_unambiguous(a);
        Report r;
        r.add("unambiguous", v.holds);
        if (!v) detail::witness(r, "unambiguous", v, &a, a.alphabet());
        emit(r);
    })->add_option("file", file, "Automaton file")->required();

    verb(check, "strongly-unambiguous", "At most one bi-infinite path per label", [&] {
        Automaton a = detail::load_automaton(file);
        Verdict u = is_unambiguous(a);
        Verdict v = is_strongly_unambiguous(a);
        Report r;
        r.add("unambiguous", u.holds);
        if (!u) detail::witness(r, "unambiguous", u, &a, a.alphabet());
        r.add("strongly-unambiguous", v.holds);
        if (!v) detail::witness(r, "strongly-unambiguous", v, &a, a.alphabet());
        emit(r);
    })->add_option("file", file, "Automaton file")->required();

    auto* relative = verb(check, "relative", "Unambiguity relative to a subshift of the edge shift", [&] {
        Automaton a = detail::load_automaton(file);
        Automaton b = detail::load_automaton(file2);
        if (b.alphabet().size() != a.edges().size())
            throw InputError("alphabet mismatch: the subshift automaton needs one letter per edge (" +
                             std::to_string(a.edges().size()) + ")");
        Automaton relabeled(Alphabet::indexed(a.edges().size()), b.size(), b.edges(), b.initial(), b.terminal(),
                            b.names());
        Verdict v = unambiguous_on_sofic(a, relabeled);
        Report r;
        r.add("relative-unambiguous", v.holds);
        if (!v) detail::witness(r, "relative-unambiguous", v, &a, a.alphabet());
        emit(r);
    });
    relative->add_option("automaton", file, "Automaton file")->required();
    relative->add_option("subshift", file2, "Automaton over the edges, letter i for the i-th edge")->required();

    verb(check, "synchronized", "Synchronized shift test", [&] {
        SoficShift x(detail::load_automaton(file));
        Verdict v = is_synchronized_shift(x, max_len);
        Report r;
        r.add("synchronized", v.holds);
        if (v) {
            r.add("synchronized.word", detail::word_or_eps(x.alphabet(), v.words.at(0)));
            r.add("synchronized.component", std::to_string(v.states.size()));
        } else {
            r.add("synchronized.detail", v.detail);
        }
        emit(r);
    })->add_option("file", file, "Automaton file")->required();
    check->get_subcommand("synchronized")->add_option("--max-len", max_len, "Longest merging word searched");

    auto* recode = verb(&app, "recode", "Recode a synchronized prefix code by first returns", [&] {
        auto c = detail::load_code(file);
        RecodeOptions options;
        options.max_constant_len = max_len;
        RecodedPresentation p = recode_unambiguous(detail::as_expression(c), options);
        const Alphabet& a = detail::alphabet_of(c);
        if (dot) {
            out << to_dot(p.product);
            return;
        }
        Report r;
        r.add("constant", detail::word_or_eps(a, p.constant.word));
        r.add("anchor", p.product.name(p.anchor));
        r.add("product.states", std::to_string(p.product.size()));
        r.add("C'", p.code.str());
        emit(r);
    });
    recode->add_option("file", file, "Code file")->required();
    recode->add_option("--max-len", max_len, "Longest constant searched");
    recode->add_flag("--dot", dot, "Print the product automaton as DOT");

    auto* fischer = verb(&app, "fischer", "Subset presentation from a word", [&] {
        SoficShift x(detail::load_automaton(file));
        Dfa d = x.language_dfa();
        Automaton f = fischer_subset(d, x.alphabet().word(word));
        detail::emit_automaton(out, f, dot);
    });
    fischer->add_option("file", file, "Automaton file")->required();
    fischer->add_option("word", word, "Word w of the language")->required();
    fischer->add_flag("--dot", dot, "DOT output");

    auto* morphism = app.add_subcommand("morphism", "Morphism checks")->require_subcommand(1);
    verb(morphism, "bouquet", "Bouquet automaton", [&] {
        Morphism m = parse_morphism(read_file(file));
        detail::emit_automaton(out, bouquet(m), dot);
    })->add_option("file", file, "Morphism file")->required();
    morphism->get_subcommand("bouquet")->add_flag("--dot", dot, "DOT output");

    verb(morphism, "primitive", "Primitivity", [&] {
        Morphism m = parse_morphism(read_file(file));
        Verdict v = is_primitive(m, max_len);
        Report r;
        r.add("primitive", v.holds);
        r.add("primitive.detail", v.detail);
        emit(r);
    })->add_option("file", file, "Morphism file")->required();
    morphism->get_subcommand("primitive")->add_option("--max-len", max_len, "Largest power examined");

    verb(morphism, "circular", "Circularity via the bouquet automaton", [&] {
        Morphism m = parse_morphism(read_file(file));
        Verdict v = is_circular_morphism(m);
        Report r;
        r.add("circular", v.holds);
        if (!v) detail::witness(r, "circular", v, nullptr, m.target());
        emit(r);
    })->add_option("file", file, "Morphism file")->required();

    auto* recog = verb(morphism, "recognizable", "Bounded recognizability", [&] {
        Morphism m = parse_morphism(read_file(file));
        Verdict v = recognizability_bounded(m, window_k);
        Report r;
        r.add("recognizable", std::string(v ? "sound-yes" : "inconclusive"));
        r.add("window", std::to_string(window_k));
        if (!v) {
            Automaton a = bouquet(m);
            detail::witness(r, "recognizable", v, &a, m.target());
        }
        emit(r);
    });
    recog->add_option("file", file, "Morphism file")->required();
    recog->add_option("--window", window_k, "Window length k")->check(CLI::Range(2, 12));

    auto* fiebig = verb(&app, "fiebig", "Window of a countable reversible presentation", [&] {
        Automaton base = detail::load_automaton(file);
        auto seed = fiebig_seed(base);
        if (auto single = std::get_if<SingleWordCase>(&seed)) {
            Report r;
            r.add("single-word", base.alphabet().str(single->cycle));
            emit(r);
            return;
        }
        const FiebigSeed& s = std::get<FiebigSeed>(seed);
        std::unique_ptr<LazyAutomaton> la;
        if (mode == "reversible")
            la = std::make_unique<ReversibleFiebig>(s);
        else
            la = std::make_unique<StronglyUnambiguousFiebig>(s);
        Window w = window(*la, radius);
        const Alphabet& a = base.alphabet();
        out << "# u=" << detail::word_or_eps(a, s.u()) << " v=" << detail::word_or_eps(a, s.v())
            << " w=" << detail::word_or_eps(a, s.w()) << "\n";
        out << "# boundary";
        for (State q = 0; q < w.states.size(); ++q)
            if (w.boundary[q]) out << " " << q;
        out << "\n";
        if (dot) {
            out << to_dot(w.automaton, w.boundary);
            return;
        }
        out << serialize(w.automaton);
    });
    fiebig->add_option("file", file, "Strongly connected base automaton")->required();
    fiebig->add_option("--mode", mode, "reversible or strong")->check(CLI::IsMember({"reversible", "strong"}));
    fiebig->add_option("--radius", radius, "Window radius")->check(CLI::Range(0, 2000));
    fiebig->add_flag("--dot", dot, "DOT output");

    auto* beta = verb(&app, "beta", "Automaton of a beta-shift", [&] {
        auto digits = [](const std::string& s) {
            std::vector<unsigned> out;
            for (char c : s) {
                if (c < '0' || c > '9') throw InputError(std::string("invalid digit '") + c + "'");
                out.push_back(static_cast<unsigned>(c - '0'));
            }
            return out;
        };
        BetaSpec spec{digits(preperiod), digits(period)};
        detail::emit_automaton(out, beta_automaton(spec), dot);
    });
    beta->add_option("--preperiod", preperiod, "Preperiod digits of the generating sequence");
    beta->add_option("--period", period, "Period digits of the generating sequence")->required();
    beta->add_flag("--dot", dot, "DOT output");

    auto* sft = verb(&app, "sft", "Shift of finite type from forbidden words", [&] {
        Alphabet a(alphabet_chars);
        std::vector<Word> ws;
        std::stringstream in(forbidden);
        for (std::string item; std::getline(in, item, ',');)
            if (!item.empty()) ws.push_back(a.word(item));
        detail::emit_automaton(out, sft_from_forbidden(ws, a).presentation(), dot);
    });
    sft->add_option("--forbidden", forbidden, "Comma-separated forbidden words")->required();
    sft->add_option("--alphabet", alphabet_chars, "Alphabet letters")->required();
    sft->add_flag("--dot", dot, "DOT output");

    auto* blockmap = verb(&app, "blockmap", "Image of a sofic shift under a block map", [&] {
        SoficShift x(detail::load_automaton(file));
        BlockMap f = parse_block_map(read_file(file2), x.alphabet());
        detail::emit_automaton(out, apply_block_map(x, f).presentation(), dot);
    });
    blockmap->add_option("automaton", file, "Automaton file")->required();
    blockmap->add_option("map", file2, "Block map file")->required();
    blockmap->add_flag("--dot", dot, "DOT output");

    verb(&app, "dot", "DOT export of an automaton",
         [&] { out << to_dot(detail::load_automaton(file)); })
        ->add_option("file", file, "Automaton file")
        ->required();

    std::vector<const char*> argv{"codedshift"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    try {
        if (action) action();
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace codedshift::cli
