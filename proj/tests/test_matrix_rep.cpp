#include <doctest.h>

#include "belts/matrix_rep.hpp"
#include "belts/verify.hpp"

using namespace belts;

namespace {
const Perm3 P12 = Perm3::transposition(1, 2);
const Perm3 P23 = Perm3::transposition(2, 3);
}  // namespace

TEST_CASE("rho_of table") {
    CHECK(rho_of(s1) == FramedPermutation{{{-1, -1, 1}}, P12});
    CHECK(rho_of(s1_inv) == FramedPermutation{{{1, 1, -1}}, P12});
    CHECK(rho_of(s2) == FramedPermutation{{{1, -1, -1}}, P23});
    CHECK(rho_of(s2_inv) == FramedPermutation{{{-1, 1, 1}}, P23});
    for (Generator g : {s1, s1_inv, s2, s2_inv})
        CHECK(rho_of(g).twist == -twist_of_generator(g));
}

TEST_CASE("fp_multiply matches the worked products") {
    FramedPermutation r1r2r1 =
        fp_multiply(fp_multiply(rho_of(s1), rho_of(s2)), rho_of(s1));
    CHECK(r1r2r1.twist == TwistWord{{-1, -1, -1}});

    FramedPermutation r2r1r2 =
        fp_multiply(fp_multiply(rho_of(s2), rho_of(s1)), rho_of(s2));
    CHECK(r2r1r2.twist == TwistWord{{-1, -1, -1}});
    CHECK(r1r2r1.twist == r2r1r2.twist);

    FramedPermutation ex =
        fp_multiply(fp_multiply(rho_of(s1), rho_of(s2)), rho_of(s1_inv));
    CHECK(ex.twist == TwistWord{{-3, 1, 1}});

    FramedPermutation f = rho_of(s2);
    CHECK(fp_multiply(f, FramedPermutation::identity()) == f);
    CHECK(fp_multiply(FramedPermutation::identity(), f) == f);
}

TEST_CASE("rho_accumulate") {
    FramedPermutation acc = rho_accumulate({s1, s2, s1_inv});
    CHECK(acc.twist == TwistWord{{-3, 1, 1}});
    CHECK(acc.perm == Perm3::transposition(1, 3));

    CHECK(rho_accumulate({}) == FramedPermutation::identity());
    CHECK(rho_accumulate({s1}) == rho_of(s1));
}

TEST_CASE("rho_accumulate is a homomorphism and tracks perm_lift") {
    for (int i = 0; i < 300; ++i) {
        TrialRng rng(61, i);
        BraidWord w1 = random_word(rng, 16);
        BraidWord w2 = random_word(rng, 16);
        CHECK(rho_accumulate(word_concat(w1, w2)) ==
              fp_multiply(rho_accumulate(w1), rho_accumulate(w2)));
        CHECK(rho_accumulate(w1).perm == perm_lift(w1));
    }
}

TEST_CASE("pure_twist_via_rho") {
    CHECK(pure_twist_via_rho({s1}) == TwistWord{{1, 1, -1}});
    CHECK(pure_twist_via_rho({}) == TwistWord{{0, 0, 0}});
    // canonical frame: plain negation would give the permuted [3/2,-1/2,-1/2]
    CHECK(pure_twist_via_rho({s1, s2, s1_inv}) == TwistWord{{-1, -1, 3}});
}

TEST_CASE("matrix route agrees with direct reduction") {
    for (int i = 0; i < 500; ++i) {
        TrialRng rng(67, i);
        BraidWord w = random_word(rng, 24);
        CHECK(pure_twist_via_rho(w) == pure_twist({TwistWord{}, w}));
    }
}

TEST_CASE("perm_matrix") {
    PermMatrix p12 = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
    PermMatrix p23 = {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
    PermMatrix id = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    CHECK(perm_matrix(P12) == p12);
    CHECK(perm_matrix(P23) == p23);
    CHECK(perm_matrix(Perm3::identity()) == id);
}

TEST_CASE("as_matrix") {
    MonomialMatrix diag = as_matrix({{{2, 4, 6}}, Perm3::identity()});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(diag[i][j] == 2 * (i + 1));
            else
                CHECK_FALSE(diag[i][j].has_value());
        }

    MonomialMatrix m = as_matrix({TwistWord{}, P12});
    PermMatrix p = perm_matrix(P12);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(m[i][j].has_value() == (p[i][j] == 1));
}

TEST_CASE("as_matrix of a product is the monomial-matrix product") {
    for (int i = 0; i < 300; ++i) {
        TrialRng rng(71, i);
        FramedPermutation f1 = {random_twist(rng, 8),
                                perm_lift(random_word(rng, 6))};
        FramedPermutation f2 = {random_twist(rng, 8),
                                perm_lift(random_word(rng, 6))};
        auto prod = monomial_product(as_matrix(f1), as_matrix(f2));
        REQUIRE(prod.has_value());
        CHECK(*prod == as_matrix(fp_multiply(f1, f2)));
    }
}
