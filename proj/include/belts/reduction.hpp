#ifndef BELTS_REDUCTION_HPP
#define BELTS_REDUCTION_HPP

#include <cstdint>

#include "belts/braid.hpp"

// The pure twist-word: the twist triple left when every crossing of a
// braided belt has been traded for twists. Equal pure twist-words mean
// isotopic belts.

namespace belts {

using PureTwistWord = TwistWord;

// Twists created when the crossing of a generator is eliminated by a
// trinion flip.
inline TwistWord twist_of_generator(Generator g) {
    TwistWord t;
    if (g.index == 1)
        t = {{1, 1, -1}};
    else
        t = {{-1, 1, 1}};
    if (g.sign < 0) t = -t;
    return t;
}

// Iterative crossing elimination, strictly left to right (top end first):
// each letter permutes the twists accumulated so far and contributes its
// own twist triple.
inline PureTwistWord pure_twist(const FramedBraid& fb) {
    TwistWord acc = fb.twist;
    for (Generator g : fb.word)
        acc = apply_perm(swap_of(g), acc) + twist_of_generator(g);
    return acc;
}

// Standard-form product: the second braid's twists ride up through the
// first braid's strands, permuted by its lift map.
inline FramedBraid multiply(const FramedBraid& fb1, const FramedBraid& fb2) {
    return {fb1.twist + apply_perm(perm_lift(fb1.word), fb2.twist),
            word_concat(fb1.word, fb2.word)};
}

inline std::int64_t writhe(const BraidWord& w) {
    std::int64_t s = 0;
    for (Generator g : w) s += g.sign;
    return s;
}

inline bool isotopic(const FramedBraid& fb1, const FramedBraid& fb2) {
    return pure_twist(fb1) == pure_twist(fb2);
}

inline TwistWord rotate_left(const TwistWord& t) {
    return {{t.halves[1], t.halves[2], t.halves[0]}};
}

// Equality up to cyclic rotation of the triple, for belts whose attachment
// network permits cycling the strands around the node.
inline bool cyclic_equivalent(const PureTwistWord& t1, const PureTwistWord& t2) {
    TwistWord r = t1;
    for (int k = 0; k < 3; ++k) {
        if (r == t2) return true;
        r = rotate_left(r);
    }
    return false;
}

// Recovers the unique top twist-word A with pure_twist(A . w) = target,
// using the affine decomposition
//   pure_twist(A . w) = Q(w)(A) + pure_twist([0,0,0] . w).
inline TwistWord inverse_reduce(const PureTwistWord& target, const BraidWord& w) {
    TwistWord base = pure_twist({TwistWord{}, w});
    return apply_perm(perm_elim(w).inverse(), target - base);
}

}  // namespace belts

#endif
