// Acceptance suite: one pass/fail line per criterion. Exit 0 only when all
// criteria hold. Everything is exact integer arithmetic; no tolerances.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "belts/braid.hpp"
#include "belts/catalog.hpp"
#include "belts/expression.hpp"
#include "belts/matrix_rep.hpp"
#include "belts/reduction.hpp"
#include "belts/symbol_stack.hpp"
#include "belts/verify.hpp"

using namespace belts;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
              << name << "\n";
    if (!ok) {
        ++g_failures;
        if (!detail.empty()) std::cout << "     " << detail << "\n";
    }
}

TwistWord whole(std::int64_t a, std::int64_t b, std::int64_t c) {
    return {{2 * a, 2 * b, 2 * c}};
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd =
        std::string("BELT_COLOR=never ") + BELT_CLI_PATH + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

void criterion_1() {
    report(1, "pure twist of [0,0,0] s2^-1 s1 is [0,1,-1]",
           pure_twist({whole(0, 0, 0), {s2_inv, s1}}) == whole(0, 1, -1));
}

void criterion_2() {
    report(2, "pure twist of the belt word (s2^-1 s1)^3 is [0,0,0]",
           pure_twist({whole(0, 0, 0),
                       {s2_inv, s1, s2_inv, s1, s2_inv, s1}}) ==
               whole(0, 0, 0));
}

void criterion_3() {
    report(3, "positron [1,1,1] s1 s2^-1 reduces to [2,0,1]",
           pure_twist({whole(1, 1, 1), {s1, s2_inv}}) == whole(2, 0, 1));
}

void criterion_4() {
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        TrialRng rng(101, i);
        std::int64_t r = rng.uniform(-20, 20), s = rng.uniform(-20, 20),
                     t = rng.uniform(-20, 20), x = rng.uniform(-20, 20),
                     y = rng.uniform(-20, 20), z = rng.uniform(-20, 20);
        ok = pure_twist({{{r + z, s + x, t + y}}, {s1, s2}}) ==
             TwistWord{{s + x, t + y, r + z + 2}};
    }
    report(4, "symbolic law [r+z,s+x,t+y] s1 s2 -> [s+x,t+y,r+z+1], 1000 tuples",
           ok);
}

void criterion_5() {
    FramedPermutation r1r2r1 =
        fp_multiply(fp_multiply(rho_of(s1), rho_of(s2)), rho_of(s1));
    FramedPermutation r2r1r2 =
        fp_multiply(fp_multiply(rho_of(s2), rho_of(s1)), rho_of(s2));
    report(5, "rho_1 rho_2 rho_1 and rho_2 rho_1 rho_2 share twist [-1/2,-1/2,-1/2]",
           r1r2r1.twist == TwistWord{{-1, -1, -1}} &&
               r2r1r2.twist == TwistWord{{-1, -1, -1}});
}

void criterion_6_and_8() {
    bool agree = true, conserve = true;
    std::string bad;
    for (int i = 0; i < 10000; ++i) {
        TrialRng rng(103, i);
        FramedBraid fb = random_framed_braid(rng, 32, 10);
        PureTwistWord direct = pure_twist(fb);
        auto [via_stack, end_map] = evaluate(build_stack(fb));
        PureTwistWord via_rho = apply_perm(perm_elim(fb.word), fb.twist) +
                                pure_twist_via_rho(fb.word);
        if (direct != via_stack || direct != via_rho ||
            end_map != perm_elim(fb.word)) {
            agree = false;
            if (bad.empty()) bad = render_expression(fb);
        }
        if (direct.sum_halves() != fb.twist.sum_halves() + writhe(fb.word)) {
            conserve = false;
            if (bad.empty()) bad = render_expression(fb);
        }
    }
    report(6, "three methods and the stack end-map agree on 10000 braids",
           agree, bad);
    report(8, "twist-sum conservation on the same corpus", conserve, bad);
}

void criterion_7() {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < 10000 && ok; ++i) {
        TrialRng rng(107, i);
        FramedBraid fb = random_framed_braid(rng, 32, 10);
        BraidWord v = fb.word;
        int steps = static_cast<int>(rng.uniform(1, 8));
        for (int k = 0; k < steps; ++k) v = random_neighbor(rng, v);
        if (pure_twist({fb.twist, v}) != pure_twist(fb) ||
            perm_lift(v) != perm_lift(fb.word)) {
            ok = false;
            bad = render_expression(fb);
        }
    }
    report(7, "rewrite invariance over 10000 random neighbor chains", ok, bad);
}

void criterion_9() {
    // the published table, frozen independently of catalog.hpp
    struct Row {
        const char* name;
        std::array<std::int64_t, 3> left, right;
    };
    const std::vector<Row> table = {
        {"e-", {0, -2, -1}, {-1, 0, -2}},    {"ubar_B", {0, -1, -1}, {-1, 1, -2}},
        {"ubar_G", {1, -2, -1}, {-1, 0, -1}}, {"ubar_R", {0, -2, 0}, {0, 0, -2}},
        {"d_B", {1, -2, 0}, {0, 0, -1}},      {"d_G", {0, -1, 0}, {0, 1, -2}},
        {"d_R", {1, -1, -1}, {-1, 1, -1}},    {"nu", {1, -1, 0}, {0, 1, -1}},
        {"dbar_B", {1, 0, 0}, {0, 2, -1}},    {"dbar_G", {2, -1, 0}, {0, 1, 0}},
        {"dbar_R", {1, -1, 1}, {1, 1, -1}},   {"u_B", {2, -1, 1}, {1, 1, 0}},
        {"u_G", {1, 0, 1}, {1, 2, -1}},       {"u_R", {2, 0, 0}, {0, 2, 0}},
        {"e+", {2, 0, 1}, {1, 2, 0}},
    };

    bool ok = all_entries().size() == 30;
    for (const Row& row : table) {
        auto l = lookup(row.name, Handedness::left);
        auto r = lookup(row.name, Handedness::right);
        ok = ok && l && r &&
             l->pure == whole(row.left[0], row.left[1], row.left[2]) &&
             r->pure == whole(row.right[0], row.right[1], row.right[2]);
    }

    ok = ok && collisions(CollisionMode::exact).empty();

    std::vector<ParticleEntry> entries = all_entries();
    bool found_nu = false;
    for (auto [i, j] : collisions(CollisionMode::cyclic))
        if (entries[i].name() == "nu" && entries[j].name() == "nu")
            found_nu = true;
    ok = ok && found_nu;

    for (const ParticleEntry& e : entries) {
        FramedBraid fb = derive_standard_form(e);
        ok = ok && pure_twist(fb) == e.pure;
        for (auto h : fb.twist.halves)
            ok = ok && h % 2 == 0 && h >= -2 && h <= 2;
    }

    report(9, "catalog matches the table; collisions and roundtrips as stated",
           ok);
}

void criterion_10() {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < 10000 && ok; ++i) {
        TrialRng rng(109, i);
        TwistWord target = random_twist(rng, 10);
        BraidWord w = random_word(rng, 32);
        if (pure_twist({inverse_reduce(target, w), w}) != target) {
            ok = false;
            bad = render_expression({target, w});
        }
    }
    report(10, "inverse reduction roundtrip on 10000 (target, word) pairs", ok,
           bad);
}

void criterion_11() {
    ErratumCase fig = worked_figure_erratum();
    ErratumCase frame = matrix_frame_erratum();
    bool in_process = fig.methods_agree && !fig.flagged_reproduced &&
                      fig.computed == "[1, 2, -2]" &&
                      fig.flagged == "[1, 2, -1]" && frame.methods_agree &&
                      !frame.flagged_reproduced &&
                      frame.computed == "[-1/2, -1/2, 3/2]" &&
                      frame.flagged == "[3/2, -1/2, -1/2]";

    RunResult r = run_cli("verify --trials 20 --seed 3 --max-len 10");
    bool printed = r.exit_code == 0 && contains(r.output, "erratum report") &&
                   contains(r.output, "[1, 2, -2]") &&
                   contains(r.output, "[1, 2, -1]") &&
                   contains(r.output, "[3/2, -1/2, -1/2]") &&
                   contains(r.output, "[-1/2, -1/2, 3/2]");

    report(11, "erratum report emitted; corrected methods mutually agree",
           in_process && printed);
}

void criterion_12() {
    FramedBraid positron = parse_expression("[1,1,1] s1 s2^-1");
    FramedBraid belt = parse_expression("(s2^-1 s1)^3");
    FramedBraid fig = parse_expression("[1/2,3/2,-1/2] s1 s2 s1^-1 s1^-1 s2^-1");
    bool grammar =
        positron == FramedBraid{whole(1, 1, 1), {s1, s2_inv}} &&
        belt == FramedBraid{whole(0, 0, 0),
                            {s2_inv, s1, s2_inv, s1, s2_inv, s1}} &&
        fig == FramedBraid{{{1, 3, -1}}, {s1, s2, s1_inv, s1_inv, s2_inv}};

    bool roundtrip = true;
    for (int i = 0; i < 10000 && roundtrip; ++i) {
        TrialRng rng(113, i);
        FramedBraid fb = random_framed_braid(rng, 64, 12);
        roundtrip = parse_expression(render_expression(fb)) == fb;
    }

    RunResult bad = run_cli("reduce \"[1,1,1] s1 %%\"");
    bool malformed = bad.exit_code == 2 && contains(bad.output, "line 1") &&
                     contains(bad.output, "col");

    report(12, "parser examples, 10000 render roundtrips, exit 2 on bad input",
           grammar && roundtrip && malformed);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6_and_8();
    criterion_7();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();

    if (g_failures) {
        std::cout << g_failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
