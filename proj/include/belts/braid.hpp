#ifndef BELTS_BRAID_HPP
#define BELTS_BRAID_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

// Value types for three-strand braid words, position permutations and
// twist-words. Twists are stored in half-units so that all arithmetic is
// exact: a stored value of 3 means 3/2 half-twists.

namespace belts {

struct Generator {
    int index;  // 1 or 2
    int sign;   // +1 or -1

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline constexpr Generator s1{1, +1};
inline constexpr Generator s1_inv{1, -1};
inline constexpr Generator s2{2, +1};
inline constexpr Generator s2_inv{2, -1};

using BraidWord = std::vector<Generator>;

inline Generator inverse_generator(Generator g) {
    return {g.index, -g.sign};
}

inline BraidWord word_concat(const BraidWord& w1, const BraidWord& w2) {
    BraidWord out = w1;
    out.insert(out.end(), w2.begin(), w2.end());
    return out;
}

inline BraidWord word_inverse(const BraidWord& w) {
    BraidWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(inverse_generator(*it));
    return out;
}

// Deletes adjacent cancelling pairs until none remain. Free reduction is
// confluent, so a single left-to-right stack pass suffices.
inline BraidWord free_reduce(const BraidWord& w) {
    BraidWord stack;
    for (Generator g : w) {
        if (!stack.empty() && stack.back().index == g.index &&
            stack.back().sign == -g.sign) {
            stack.pop_back();
        } else {
            stack.push_back(g);
        }
    }
    return stack;
}

// Triple of twists in half-units: entry i represents halves[i]/2 half-turns.
struct TwistWord {
    std::array<std::int64_t, 3> halves{0, 0, 0};

    friend auto operator<=>(const TwistWord&, const TwistWord&) = default;

    TwistWord operator+(const TwistWord& o) const {
        return {{halves[0] + o.halves[0], halves[1] + o.halves[1],
                 halves[2] + o.halves[2]}};
    }
    TwistWord operator-() const {
        return {{-halves[0], -halves[1], -halves[2]}};
    }
    TwistWord operator-(const TwistWord& o) const { return *this + (-o); }

    std::int64_t sum_halves() const { return halves[0] + halves[1] + halves[2]; }
};

// Renders a half-unit value as a reduced fraction: 4 -> "2", 3 -> "3/2".
inline std::string half_display(std::int64_t h) {
    if (h % 2 == 0) return std::to_string(h / 2);
    return std::to_string(h) + "/2";
}

inline std::string twist_display(const TwistWord& t) {
    return "[" + half_display(t.halves[0]) + ", " + half_display(t.halves[1]) +
           ", " + half_display(t.halves[2]) + "]";
}

// Permutation of positions {1,2,3}. image[i-1] = pi(i); acting on a triple
// moves the content at position i to position pi(i).
struct Perm3 {
    std::array<int, 3> image{1, 2, 3};

    friend auto operator<=>(const Perm3&, const Perm3&) = default;

    static Perm3 identity() { return {}; }

    static Perm3 transposition(int a, int b) {
        Perm3 p;
        p.image[a - 1] = b;
        p.image[b - 1] = a;
        return p;
    }

    Perm3 inverse() const {
        Perm3 inv;
        for (int i = 0; i < 3; ++i) inv.image[image[i] - 1] = i + 1;
        return inv;
    }
};

// Function composition outer . inner: the content action of the result
// applies inner first, then outer.
inline Perm3 compose(const Perm3& outer, const Perm3& inner) {
    Perm3 p;
    for (int i = 0; i < 3; ++i) p.image[i] = outer.image[inner.image[i] - 1];
    return p;
}

inline TwistWord apply_perm(const Perm3& p, const TwistWord& t) {
    TwistWord r;
    for (int i = 0; i < 3; ++i) r.halves[p.image[i] - 1] = t.halves[i];
    return r;
}

// A generator and its inverse induce the same transposition of positions.
inline Perm3 swap_of(Generator g) {
    return Perm3::transposition(g.index, g.index + 1);
}

// Upward-transport map U(w): permutation felt by twists carried from below
// the braid to the top. The swap of the last letter acts first.
inline Perm3 perm_lift(const BraidWord& w) {
    Perm3 acc = Perm3::identity();
    for (Generator g : w) acc = compose(acc, swap_of(g));
    return acc;
}

// Elimination map Q(w): permutation accumulated when crossings are removed
// top-down. The swap of the first letter acts first; Q = U^-1.
inline Perm3 perm_elim(const BraidWord& w) {
    Perm3 acc = Perm3::identity();
    for (Generator g : w) acc = compose(swap_of(g), acc);
    return acc;
}

// Standard form [r,s,t]B: twists isotoped to the top, then a braid word.
// The leftmost letter is the top (free) end.
struct FramedBraid {
    TwistWord twist;
    BraidWord word;

    friend auto operator<=>(const FramedBraid&, const FramedBraid&) = default;
};

// All words one rewrite step away from w: the braid relation
// s1 s2 s1 <-> s2 s1 s2 (and the all-inverses variant), insertion of a
// cancelling pair at any position, deletion of an adjacent cancelling pair.
// Every neighbor represents the same element of B3.
inline std::set<BraidWord> relation_neighbors(const BraidWord& w) {
    std::set<BraidWord> out;
    const std::size_t n = w.size();

    // braid relation: three letters of equal sign, indices (a,b,a) -> (b,a,b)
    for (std::size_t i = 0; i + 2 < n; ++i) {
        Generator a = w[i], b = w[i + 1], c = w[i + 2];
        if (a.sign == b.sign && b.sign == c.sign && a.index == c.index &&
            a.index != b.index) {
            BraidWord v = w;
            v[i] = b;
            v[i + 1] = a;
            v[i + 2] = b;
            out.insert(std::move(v));
        }
    }

    // pair insertion
    for (std::size_t i = 0; i <= n; ++i) {
        for (Generator g : {s1, s1_inv, s2, s2_inv}) {
            BraidWord v = w;
            v.insert(v.begin() + static_cast<std::ptrdiff_t>(i),
                     {g, inverse_generator(g)});
            out.insert(std::move(v));
        }
    }

    // pair deletion
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (w[i].index == w[i + 1].index && w[i].sign == -w[i + 1].sign) {
            BraidWord v = w;
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
                    v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            out.insert(std::move(v));
        }
    }

    return out;
}

}  // namespace belts

#endif
