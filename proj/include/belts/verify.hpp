#ifndef BELTS_VERIFY_HPP
#define BELTS_VERIFY_HPP

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "belts/braid.hpp"
#include "belts/catalog.hpp"
#include "belts/expression.hpp"
#include "belts/matrix_rep.hpp"
#include "belts/reduction.hpp"
#include "belts/symbol_stack.hpp"

// Randomized property suite over the whole library, plus the report on the
// two flagged literals (the worked-figure value that breaks twist-sum
// conservation, and the matrix-route frame variant).

namespace belts {

// Splittable deterministic generator: trial i derives its stream from
// (seed, i) only, so trials are order-independent.
class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state_(mix(seed ^ mix(trial + 0x9E3779B97F4A7C15ull))) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

inline Generator random_generator(TrialRng& rng) {
    static constexpr Generator gens[4] = {s1, s1_inv, s2, s2_inv};
    return gens[rng.uniform(0, 3)];
}

inline BraidWord random_word(TrialRng& rng, int max_len) {
    BraidWord w(static_cast<std::size_t>(rng.uniform(0, max_len)));
    for (Generator& g : w) g = random_generator(rng);
    return w;
}

inline TwistWord random_twist(TrialRng& rng, std::int64_t max_halves) {
    TwistWord t;
    for (auto& h : t.halves) h = rng.uniform(-max_halves, max_halves);
    return t;
}

inline FramedBraid random_framed_braid(TrialRng& rng, int max_len,
                                       std::int64_t max_halves = 10) {
    return {random_twist(rng, max_halves), random_word(rng, max_len)};
}

// Picks a uniform element of relation_neighbors(w).
inline BraidWord random_neighbor(TrialRng& rng, const BraidWord& w) {
    std::set<BraidWord> nb = relation_neighbors(w);
    auto it = nb.begin();
    std::advance(it, rng.uniform(0, static_cast<std::int64_t>(nb.size()) - 1));
    return *it;
}

struct PropertyResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_failure;  // rendered counterexample, if any

    bool passed() const { return failures == 0; }
};

struct ErratumCase {
    std::string description;
    std::string computed;  // value all three methods agree on
    std::string flagged;   // the literal printed in the source figure/text
    std::string witness;
    bool methods_agree = false;
    bool flagged_reproduced = false;  // true would mean the literal is right
};

struct VerifyReport {
    std::vector<PropertyResult> properties;
    std::vector<ErratumCase> errata;

    bool all_pass() const {
        for (const auto& p : properties)
            if (!p.passed()) return false;
        for (const auto& e : errata)
            if (!e.methods_agree || e.flagged_reproduced) return false;
        return true;
    }
};

namespace detail {

template <typename Check>
PropertyResult run_property(const std::string& name, int trials,
                            std::uint64_t seed, Check check) {
    PropertyResult r;
    r.name = name;
    r.trials = trials;
    for (int i = 0; i < trials; ++i) {
        TrialRng rng(seed, static_cast<std::uint64_t>(i));
        std::string why = check(rng);
        if (!why.empty()) {
            if (r.failures == 0) r.first_failure = why;
            ++r.failures;
        }
    }
    return r;
}

}  // namespace detail

inline ErratumCase worked_figure_erratum() {
    const FramedBraid fb = {{{1, 3, -1}},
                            {s1, s2, s1_inv, s1_inv, s2_inv}};
    const TwistWord flagged = {{2, 4, -2}};  // [1, 2, -1]

    PureTwistWord direct = pure_twist(fb);
    PureTwistWord via_stack = evaluate(build_stack(fb)).first;
    PureTwistWord via_rho = apply_perm(perm_elim(fb.word), fb.twist) +
                            pure_twist_via_rho(fb.word);

    ErratumCase e;
    e.description =
        "worked figure, " + render_expression(fb) + ": published value "
        "conflicts with twist-sum conservation";
    e.computed = twist_display(direct);
    e.flagged = twist_display(flagged);
    std::int64_t expected_sum = fb.twist.sum_halves() + writhe(fb.word);
    e.witness = "entry sum must be " + half_display(expected_sum) +
                " (initial sum + writhe/2); flagged value sums to " +
                half_display(flagged.sum_halves());
    e.methods_agree = direct == via_stack && direct == via_rho;
    e.flagged_reproduced = direct == flagged;
    return e;
}

inline ErratumCase matrix_frame_erratum() {
    const BraidWord w = {s1, s2, s1_inv};
    FramedPermutation f = rho_accumulate(w);
    PureTwistWord plain_negation = -f.twist;
    PureTwistWord canonical = pure_twist({TwistWord{}, w});

    ErratumCase e;
    e.description =
        "matrix route for s1 s2 s1^-1: plain negation of the accumulated "
        "twist is off by the braid's residual permutation";
    e.computed = twist_display(canonical);
    e.flagged = twist_display(plain_negation);
    e.witness = "frame-corrected matrix route gives " +
                twist_display(pure_twist_via_rho(w));
    e.methods_agree = pure_twist_via_rho(w) == canonical &&
                      evaluate(build_stack({TwistWord{}, w})).first == canonical;
    e.flagged_reproduced = canonical == plain_negation;
    return e;
}

inline VerifyReport run_verify(int trials, std::uint64_t seed, int max_len) {
    VerifyReport report;

    report.properties.push_back(detail::run_property(
        "method agreement (direct / symbol stack / matrix rep)", trials, seed,
        [&](TrialRng& rng) -> std::string {
            FramedBraid fb = random_framed_braid(rng, max_len);
            PureTwistWord direct = pure_twist(fb);
            auto [via_stack, end_map] = evaluate(build_stack(fb));
            PureTwistWord via_rho =
                apply_perm(perm_elim(fb.word), fb.twist) +
                pure_twist_via_rho(fb.word);
            if (direct != via_stack || direct != via_rho ||
                end_map != perm_elim(fb.word))
                return render_expression(fb);
            return {};
        }));

    report.properties.push_back(detail::run_property(
        "rewrite invariance (braid relation and free reduction)", trials,
        seed ^ 0x1, [&](TrialRng& rng) -> std::string {
            FramedBraid fb = random_framed_braid(rng, max_len);
            BraidWord v = fb.word;
            int steps = static_cast<int>(rng.uniform(1, 8));
            for (int k = 0; k < steps; ++k) v = random_neighbor(rng, v);
            if (pure_twist({fb.twist, v}) != pure_twist(fb) ||
                perm_lift(v) != perm_lift(fb.word))
                return render_expression(fb);
            return {};
        }));

    report.properties.push_back(detail::run_property(
        "twist-sum conservation (sum = initial sum + writhe/2)", trials,
        seed ^ 0x2, [&](TrialRng& rng) -> std::string {
            FramedBraid fb = random_framed_braid(rng, max_len);
            if (pure_twist(fb).sum_halves() !=
                fb.twist.sum_halves() + writhe(fb.word))
                return render_expression(fb);
            return {};
        }));

    report.properties.push_back(detail::run_property(
        "inverse reduction roundtrip", trials, seed ^ 0x3,
        [&](TrialRng& rng) -> std::string {
            TwistWord target = random_twist(rng, 10);
            BraidWord w = random_word(rng, max_len);
            if (pure_twist({inverse_reduce(target, w), w}) != target)
                return render_expression({target, w});
            return {};
        }));

    report.properties.push_back(detail::run_property(
        "multiplication consistency (block elimination)", trials, seed ^ 0x4,
        [&](TrialRng& rng) -> std::string {
            FramedBraid f1 = random_framed_braid(rng, max_len);
            FramedBraid f2 = random_framed_braid(rng, max_len);
            PureTwistWord lhs = pure_twist(multiply(f1, f2));
            PureTwistWord rhs =
                apply_perm(perm_elim(f2.word), pure_twist(f1)) +
                pure_twist(f2);
            if (lhs != rhs)
                return render_expression(f1) + " x " + render_expression(f2);
            return {};
        }));

    report.properties.push_back(detail::run_property(
        "parser roundtrip (parse . render = id)", trials, seed ^ 0x5,
        [&](TrialRng& rng) -> std::string {
            FramedBraid fb = random_framed_braid(rng, max_len, 12);
            if (parse_expression(render_expression(fb)) != fb)
                return render_expression(fb);
            return {};
        }));

    report.properties.push_back(detail::run_property(
        "catalog roundtrip (standard form reduces to tabulated value)", 1,
        seed, [&](TrialRng&) -> std::string {
            for (const ParticleEntry& e : all_entries()) {
                FramedBraid fb = derive_standard_form(e);
                if (pure_twist(fb) != e.pure)
                    return e.name() + " " + handedness_name(e.handedness);
                for (auto h : fb.twist.halves)
                    if (h % 2 != 0 || h < -2 || h > 2)
                        return e.name() + ": non-whole recovered twist";
            }
            return {};
        }));

    report.errata.push_back(worked_figure_erratum());
    report.errata.push_back(matrix_frame_erratum());
    return report;
}

}  // namespace belts

#endif
