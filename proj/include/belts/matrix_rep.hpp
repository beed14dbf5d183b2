#ifndef BELTS_MATRIX_REP_HPP
#define BELTS_MATRIX_REP_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "belts/braid.hpp"
#include "belts/reduction.hpp"

// Monomial-matrix representation of framed 3-braids: a framed permutation
// (T, P) stands for the matrix diag(t^a, t^b, t^c) P. Products follow
// P D = D^P P. The formal variable t is never evaluated; matrices carry
// exponents only.

namespace belts {

struct FramedPermutation {
    TwistWord twist;  // exponents of the diagonal monomials, in half-units
    Perm3 perm;

    friend auto operator<=>(const FramedPermutation&,
                            const FramedPermutation&) = default;

    static FramedPermutation identity() { return {}; }
};

// Matrix product f1 * f2: the right factor's diagonal moves left through
// P1, picking up P1's permutation.
inline FramedPermutation fp_multiply(const FramedPermutation& f1,
                                     const FramedPermutation& f2) {
    return {f1.twist + apply_perm(f1.perm, f2.twist),
            compose(f1.perm, f2.perm)};
}

// Twists and permutation induced on an initially trivial 3-belt by the
// trinion flip that creates the crossing of g. The twist part is the
// negative of twist_of_generator(g).
inline FramedPermutation rho_of(Generator g) {
    return {-twist_of_generator(g), swap_of(g)};
}

inline FramedPermutation rho_accumulate(const BraidWord& w) {
    FramedPermutation acc = FramedPermutation::identity();
    for (Generator g : w) acc = fp_multiply(acc, rho_of(g));
    return acc;
}

// Pure twist-word through the representation. The accumulated twist is
// carried back through the inverse of the accumulated permutation before
// negating, so the result agrees entry-for-entry with pure_twist.
inline PureTwistWord pure_twist_via_rho(const BraidWord& w) {
    FramedPermutation f = rho_accumulate(w);
    return -apply_perm(f.perm.inverse(), f.twist);
}

using PermMatrix = std::array<std::array<int, 3>, 3>;

inline PermMatrix perm_matrix(const Perm3& p) {
    PermMatrix m{};
    // column i holds the image of basis vector e_i: e_{pi(i)}
    for (int i = 0; i < 3; ++i) m[p.image[i] - 1][i] = 1;
    return m;
}

// 3x3 monomial matrix: each entry is either absent (zero) or an exponent
// of t in half-units.
using MonomialMatrix = std::array<std::array<std::optional<std::int64_t>, 3>, 3>;

inline MonomialMatrix as_matrix(const FramedPermutation& f) {
    MonomialMatrix m{};
    PermMatrix p = perm_matrix(f.perm);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (p[r][c]) m[r][c] = f.twist.halves[r];
    return m;
}

// Direct monomial-matrix product with exponent addition. Returns nullopt
// if two nonzero terms would ever land in one entry (cannot happen for
// monomial matrices built from permutations).
inline std::optional<MonomialMatrix> monomial_product(const MonomialMatrix& a,
                                                      const MonomialMatrix& b) {
    MonomialMatrix out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 3; ++k)
                if (a[r][k] && b[k][c]) {
                    if (out[r][c]) return std::nullopt;
                    out[r][c] = *a[r][k] + *b[k][c];
                }
    return out;
}

}  // namespace belts

#endif
