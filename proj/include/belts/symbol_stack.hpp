#ifndef BELTS_SYMBOL_STACK_HPP
#define BELTS_SYMBOL_STACK_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "belts/braid.hpp"
#include "belts/reduction.hpp"

// The +/- symbol-stack schematic: an independent route to the pure
// twist-word, and a text diagram renderer. One row per braid letter; a
// cross sits under the pair of similar symbols, a bar under the third.

namespace belts {

enum class Connector { cross_1_2, cross_2_3 };

struct StackRow {
    std::array<char, 3> symbols;  // '+' or '-'
    Connector connector;
};

struct SymbolStack {
    TwistWord header;
    std::vector<StackRow> rows;
};

inline std::array<char, 3> symbols_of(Generator g) {
    std::array<char, 3> s;
    TwistWord t = twist_of_generator(g);
    for (int i = 0; i < 3; ++i) s[i] = t.halves[i] > 0 ? '+' : '-';
    return s;
}

inline SymbolStack build_stack(const FramedBraid& fb) {
    SymbolStack st;
    st.header = fb.twist;
    st.rows.reserve(fb.word.size());
    for (Generator g : fb.word)
        st.rows.push_back({symbols_of(g), g.index == 1 ? Connector::cross_1_2
                                                       : Connector::cross_2_3});
    return st;
}

// Follows the three paths downward: each path picks up the symbol in its
// current column, then a cross swaps it between the crossed columns.
// Returns the column sums and the start -> end position map.
inline std::pair<PureTwistWord, Perm3> evaluate(const SymbolStack& st) {
    std::array<std::int64_t, 3> sum;   // indexed by start column
    std::array<int, 3> col{0, 1, 2};   // current column of each path
    for (int i = 0; i < 3; ++i) sum[i] = st.header.halves[i];

    for (const StackRow& row : st.rows) {
        for (int i = 0; i < 3; ++i)
            sum[i] += row.symbols[col[i]] == '+' ? 1 : -1;
        int a = row.connector == Connector::cross_1_2 ? 0 : 1;
        for (int i = 0; i < 3; ++i) {
            if (col[i] == a)
                col[i] = a + 1;
            else if (col[i] == a + 1)
                col[i] = a;
        }
    }

    PureTwistWord out;
    Perm3 p;
    for (int i = 0; i < 3; ++i) {
        out.halves[col[i]] = sum[i];
        p.image[i] = col[i] + 1;
    }
    return {out, p};
}

// Fixed-width ASCII layout. Cells are centered in columns of equal width;
// crosses ('x') sit midway between the two crossed column centers, bars
// ('|') at the remaining column's center. Output is byte-stable for a
// given stack.
inline std::vector<std::string> render(const SymbolStack& st) {
    auto [sums, perm] = evaluate(st);
    (void)perm;

    std::array<std::string, 3> head, foot;
    std::size_t width = 1;
    for (int i = 0; i < 3; ++i) {
        head[i] = half_display(st.header.halves[i]);
        foot[i] = half_display(sums.halves[i]);
        width = std::max({width, head[i].size(), foot[i].size()});
    }
    const std::size_t pitch = width + 2;
    auto center = [&](int i) { return i * pitch + (width - 1) / 2; };

    auto cell_line = [&](const std::array<std::string, 3>& cells) {
        std::string line;
        for (int i = 0; i < 3; ++i) {
            std::size_t pad = i * pitch + (width - cells[i].size()) / 2;
            line.append(pad - line.size(), ' ');
            line += cells[i];
        }
        return line;
    };

    std::vector<std::string> out;
    out.push_back(cell_line(head));
    for (const StackRow& row : st.rows) {
        out.push_back(cell_line({std::string(1, row.symbols[0]),
                                 std::string(1, row.symbols[1]),
                                 std::string(1, row.symbols[2])}));
        int a = row.connector == Connector::cross_1_2 ? 0 : 1;
        int bar = row.connector == Connector::cross_1_2 ? 2 : 0;
        std::size_t cross_pos = (center(a) + center(a + 1)) / 2;
        std::size_t bar_pos = center(bar);
        std::string conn(std::max(cross_pos, bar_pos) + 1, ' ');
        conn[cross_pos] = 'x';
        conn[bar_pos] = '|';
        out.push_back(std::move(conn));
    }
    out.push_back(cell_line(foot));
    return out;
}

}  // namespace belts

#endif
