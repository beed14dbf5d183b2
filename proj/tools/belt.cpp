// Command-line front end for the braided-belt library.
//
// Subcommands: reduce, multiply, equiv, table, stack, verify, batch.
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 negative
// predicate, 4 verification failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "belts/braid.hpp"
#include "belts/catalog.hpp"
#include "belts/expression.hpp"
#include "belts/reduction.hpp"
#include "belts/symbol_stack.hpp"
#include "belts/verify.hpp"

using nlohmann::json;
using namespace belts;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNegative = 3;
constexpr int kExitVerifyFail = 4;

bool use_color() {
    const char* v = std::getenv("BELT_COLOR");
    if (v && std::string(v) == "never") return false;
    return isatty(STDOUT_FILENO) != 0;
}

std::string colored(const std::string& text, const char* code) {
    if (!use_color()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string green(const std::string& s) { return colored(s, "32"); }
std::string red(const std::string& s) { return colored(s, "31"); }

void usage(std::ostream& os) {
    os << "usage: belt <command> [args]\n"
          "\n"
          "commands:\n"
          "  reduce EXPR [--json]                 pure twist-word, permutation, writhe\n"
          "  multiply EXPR EXPR [--json]          standard-form product\n"
          "  equiv EXPR EXPR [--cyclic]           isotopy check (exit 3 if not equivalent)\n"
          "  table [--collisions exact|cyclic] [--json|--tsv]\n"
          "                                       fermion catalog / collision report\n"
          "  stack EXPR                           ASCII symbol-stack diagram\n"
          "  verify [--trials N] [--seed S] [--max-len L]\n"
          "                                       run the property suite (exit 4 on failure)\n"
          "  batch FILE [--json]                  reduce one expression per line\n"
          "\n"
          "expression grammar: [r,s,t] prefix (half-integers, e.g. 3/2) followed by\n"
          "s1, s2, s1^-1, s2^-1 and parenthesized powers, e.g. \"(s2^-1 s1)^3\".\n";
}

std::vector<std::string> word_strings(const BraidWord& w) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (Generator g : w) out.push_back(render_generator(g));
    return out;
}

json reduce_json(const std::string& expr, const FramedBraid& fb) {
    PureTwistWord pure = pure_twist(fb);
    Perm3 p = perm_elim(fb.word);
    return json{{"expr", expr},
                {"twist_half_units", fb.twist.halves},
                {"word", word_strings(fb.word)},
                {"pure_twist_half_units", pure.halves},
                {"pure_twist_display", twist_display(pure)},
                {"permutation_image", p.image},
                {"writhe", writhe(fb.word)}};
}

std::string perm_display(const Perm3& p) {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        if (i) os << " ";
        os << (i + 1) << "->" << p.image[i];
    }
    return os.str();
}

int cmd_reduce(const std::vector<std::string>& args) {
    bool as_json = false;
    std::string expr;
    for (const auto& a : args) {
        if (a == "--json")
            as_json = true;
        else if (expr.empty())
            expr = a;
        else {
            usage(std::cerr);
            return kExitUsage;
        }
    }
    if (expr.empty()) {
        usage(std::cerr);
        return kExitUsage;
    }
    FramedBraid fb = parse_expression(expr);
    if (as_json) {
        std::cout << reduce_json(expr, fb).dump() << "\n";
    } else {
        std::cout << "pure twist: " << twist_display(pure_twist(fb)) << "\n"
                  << "permutation: " << perm_display(perm_elim(fb.word)) << "\n"
                  << "writhe: " << writhe(fb.word) << "\n";
    }
    return kExitOk;
}

int cmd_multiply(const std::vector<std::string>& args) {
    bool as_json = false;
    std::vector<std::string> exprs;
    for (const auto& a : args) {
        if (a == "--json")
            as_json = true;
        else
            exprs.push_back(a);
    }
    if (exprs.size() != 2) {
        usage(std::cerr);
        return kExitUsage;
    }
    FramedBraid product =
        multiply(parse_expression(exprs[0]), parse_expression(exprs[1]));
    if (as_json) {
        std::cout << json{{"expr", render_expression(product)},
                          {"twist_half_units", product.twist.halves},
                          {"word", word_strings(product.word)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << render_expression(product) << "\n";
    }
    return kExitOk;
}

int cmd_equiv(const std::vector<std::string>& args) {
    bool cyclic = false;
    std::vector<std::string> exprs;
    for (const auto& a : args) {
        if (a == "--cyclic")
            cyclic = true;
        else
            exprs.push_back(a);
    }
    if (exprs.size() != 2) {
        usage(std::cerr);
        return kExitUsage;
    }
    PureTwistWord t1 = pure_twist(parse_expression(exprs[0]));
    PureTwistWord t2 = pure_twist(parse_expression(exprs[1]));
    bool eq = cyclic ? cyclic_equivalent(t1, t2) : t1 == t2;
    std::cout << (cyclic ? "cyclic " : "") << "pure twist "
              << twist_display(t1) << (eq ? " == " : " != ")
              << twist_display(t2) << ": "
              << (eq ? green("equivalent") : red("not equivalent")) << "\n";
    return eq ? kExitOk : kExitNegative;
}

int cmd_table(const std::vector<std::string>& args) {
    bool as_json = false, as_tsv = false;
    std::string collision_mode;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--json")
            as_json = true;
        else if (args[i] == "--tsv")
            as_tsv = true;
        else if (args[i] == "--collisions" && i + 1 < args.size())
            collision_mode = args[++i];
        else {
            usage(std::cerr);
            return kExitUsage;
        }
    }

    std::vector<ParticleEntry> entries = all_entries();

    if (!collision_mode.empty()) {
        if (collision_mode != "exact" && collision_mode != "cyclic") {
            usage(std::cerr);
            return kExitUsage;
        }
        CollisionMode mode = collision_mode == "exact" ? CollisionMode::exact
                                                       : CollisionMode::cyclic;
        auto pairs = collisions(mode);
        if (as_json) {
            json out = json::array();
            for (auto [i, j] : pairs)
                out.push_back(
                    {{"first", entries[i].name() + "_" +
                                   handedness_name(entries[i].handedness)},
                     {"second", entries[j].name() + "_" +
                                    handedness_name(entries[j].handedness)}});
            std::cout << out.dump() << "\n";
        } else {
            std::cout << collision_mode << " collisions: " << pairs.size()
                      << "\n";
            for (auto [i, j] : pairs)
                std::cout << "  " << entries[i].name() << " ("
                          << handedness_name(entries[i].handedness) << ") ~ "
                          << entries[j].name() << " ("
                          << handedness_name(entries[j].handedness) << ")\n";
        }
        return kExitOk;
    }

    if (as_json) {
        json out = json::array();
        for (const auto& e : entries)
            out.push_back({{"name", e.name()},
                           {"handedness", handedness_name(e.handedness)},
                           {"pure_twist_half_units", e.pure.halves},
                           {"pure_twist_display", twist_display(e.pure)}});
        std::cout << out.dump() << "\n";
    } else {
        const char* sep = as_tsv ? "\t" : "  ";
        for (const auto& e : entries)
            std::cout << e.name() << sep << handedness_name(e.handedness)
                      << sep << half_display(e.pure.halves[0]) << sep
                      << half_display(e.pure.halves[1]) << sep
                      << half_display(e.pure.halves[2]) << "\n";
    }
    return kExitOk;
}

int cmd_stack(const std::vector<std::string>& args) {
    if (args.size() != 1) {
        usage(std::cerr);
        return kExitUsage;
    }
    FramedBraid fb = parse_expression(args[0]);
    for (const std::string& line : render(build_stack(fb)))
        std::cout << line << "\n";
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& args) {
    int trials = 1000;
    std::uint64_t seed = 0;
    int max_len = 32;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--trials" && i + 1 < args.size())
            trials = std::stoi(args[++i]);
        else if (args[i] == "--seed" && i + 1 < args.size())
            seed = std::stoull(args[++i]);
        else if (args[i] == "--max-len" && i + 1 < args.size())
            max_len = std::stoi(args[++i]);
        else {
            usage(std::cerr);
            return kExitUsage;
        }
    }

    VerifyReport report = run_verify(trials, seed, max_len);
    for (const auto& p : report.properties) {
        std::cout << (p.passed() ? green("PASS") : red("FAIL")) << " "
                  << p.name << ": " << (p.trials - p.failures) << "/"
                  << p.trials << " trials\n";
        if (!p.passed())
            std::cout << "     first counterexample: " << p.first_failure
                      << "\n";
    }

    std::cout << "\nerratum report:\n";
    for (const auto& e : report.errata) {
        std::cout << "  " << e.description << "\n"
                  << "    computed: " << e.computed
                  << "  flagged literal: " << e.flagged << "\n"
                  << "    " << e.witness << "\n"
                  << "    methods agree: " << (e.methods_agree ? "yes" : "no")
                  << "; flagged literal reproduced: "
                  << (e.flagged_reproduced ? "yes" : "no") << "\n";
    }

    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

int cmd_batch(const std::vector<std::string>& args) {
    bool as_json = false;
    std::string path;
    for (const auto& a : args) {
        if (a == "--json")
            as_json = true;
        else if (path.empty())
            path = a;
        else {
            usage(std::cerr);
            return kExitUsage;
        }
    }
    if (path.empty()) {
        usage(std::cerr);
        return kExitUsage;
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitUsage;
    }

    bool any_failed = false;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            FramedBraid fb = parse_expression(line);
            if (as_json) {
                json j = reduce_json(line, fb);
                j["line"] = lineno;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << lineno << ": " << render_expression(fb) << " -> "
                          << twist_display(pure_twist(fb)) << "\n";
            }
        } catch (const ParseError& e) {
            any_failed = true;
            if (as_json) {
                std::cout << json{{"line", lineno}, {"error", e.what()}}.dump()
                          << "\n";
            } else {
                std::cout << lineno << ": error: " << e.what() << "\n";
            }
        }
    }
    return any_failed ? kExitParse : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        usage(args.empty() ? std::cerr : std::cout);
        return args.empty() ? kExitUsage : kExitOk;
    }

    std::string cmd = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (cmd == "reduce") return cmd_reduce(rest);
        if (cmd == "multiply") return cmd_multiply(rest);
        if (cmd == "equiv") return cmd_equiv(rest);
        if (cmd == "table") return cmd_table(rest);
        if (cmd == "stack") return cmd_stack(rest);
        if (cmd == "verify") return cmd_verify(rest);
        if (cmd == "batch") return cmd_batch(rest);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    std::cerr << "unknown command: " << cmd << "\n";
    usage(std::cerr);
    return kExitUsage;
}
