#ifndef BELTS_CATALOG_HPP
#define BELTS_CATALOG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belts/braid.hpp"
#include "belts/reduction.hpp"

// Classification table of the first-generation Standard-Model fermions by
// pure twist-word, with collision analysis and recovery of standard forms.
// The tabulated pure twist-words are the authoritative data; the braid-word
// standard forms are derived from them.

namespace belts {

enum class Handedness { left, right };

inline std::string handedness_name(Handedness h) {
    return h == Handedness::left ? "left" : "right";
}

struct ParticleEntry {
    std::string base;   // e-, u, ubar, d, dbar, nu, e+
    std::string color;  // "R", "G", "B" or empty for leptons
    Handedness handedness;
    PureTwistWord pure;
    std::optional<FramedBraid> standard_form;

    std::string name() const {
        return color.empty() ? base : base + "_" + color;
    }
};

namespace detail {

struct CatalogRow {
    const char* base;
    const char* color;
    std::array<std::int64_t, 3> left;   // whole twists
    std::array<std::int64_t, 3> right;
};

// The 15 table rows, top to bottom. Values are whole twists.
inline const std::vector<CatalogRow>& catalog_rows() {
    static const std::vector<CatalogRow> rows = {
        {"e-", "", {0, -2, -1}, {-1, 0, -2}},
        {"ubar", "B", {0, -1, -1}, {-1, 1, -2}},
        {"ubar", "G", {1, -2, -1}, {-1, 0, -1}},
        {"ubar", "R", {0, -2, 0}, {0, 0, -2}},
        {"d", "B", {1, -2, 0}, {0, 0, -1}},
        {"d", "G", {0, -1, 0}, {0, 1, -2}},
        {"d", "R", {1, -1, -1}, {-1, 1, -1}},
        {"nu", "", {1, -1, 0}, {0, 1, -1}},
        {"dbar", "B", {1, 0, 0}, {0, 2, -1}},
        {"dbar", "G", {2, -1, 0}, {0, 1, 0}},
        {"dbar", "R", {1, -1, 1}, {1, 1, -1}},
        {"u", "B", {2, -1, 1}, {1, 1, 0}},
        {"u", "G", {1, 0, 1}, {1, 2, -1}},
        {"u", "R", {2, 0, 0}, {0, 2, 0}},
        {"e+", "", {2, 0, 1}, {1, 2, 0}},
    };
    return rows;
}

inline TwistWord whole_twists(const std::array<std::int64_t, 3>& w) {
    return {{2 * w[0], 2 * w[1], 2 * w[2]}};
}

}  // namespace detail

// All 30 entries: the left column top to bottom, then the right column.
inline std::vector<ParticleEntry> all_entries() {
    std::vector<ParticleEntry> out;
    out.reserve(30);
    for (Handedness h : {Handedness::left, Handedness::right}) {
        for (const auto& row : detail::catalog_rows()) {
            out.push_back({row.base, row.color, h,
                           detail::whole_twists(h == Handedness::left
                                                    ? row.left
                                                    : row.right),
                           std::nullopt});
        }
    }
    return out;
}

inline std::optional<ParticleEntry> lookup(const std::string& name,
                                           Handedness h) {
    for (const ParticleEntry& e : all_entries())
        if (e.name() == name && e.handedness == h) return e;
    return std::nullopt;
}

enum class CollisionMode { exact, cyclic };

// Unordered pairs of distinct entries (as indices into all_entries()) whose
// pure twist-words coincide exactly or up to cyclic rotation.
inline std::vector<std::pair<std::size_t, std::size_t>> collisions(
    CollisionMode mode) {
    std::vector<ParticleEntry> entries = all_entries();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            bool hit = mode == CollisionMode::exact
                           ? entries[i].pure == entries[j].pure
                           : cyclic_equivalent(entries[i].pure, entries[j].pure);
            if (hit) out.emplace_back(i, j);
        }
    return out;
}

// Input braid word per handedness. The left word is the positron's; the
// right word is a reconstruction (the figures do not spell it out) chosen
// so every recovered top twist is a whole twist.
inline BraidWord handedness_word(Handedness h) {
    return h == Handedness::left ? BraidWord{s1, s2_inv}
                                 : BraidWord{s2_inv, s1};
}

inline FramedBraid derive_standard_form(const ParticleEntry& entry) {
    BraidWord w = handedness_word(entry.handedness);
    return {inverse_reduce(entry.pure, w), w};
}

}  // namespace belts

#endif
