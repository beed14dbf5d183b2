#ifndef BELTS_EXPRESSION_HPP
#define BELTS_EXPRESSION_HPP

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "belts/braid.hpp"

// Braid-expression grammar:
//
//   expr     := twist? seq
//   twist    := "[" rational "," rational "," rational "]"
//   rational := integer | integer "/" "2"
//   seq      := item*
//   item     := atom power?
//   atom     := "s1" | "s2" | "(" seq ")"
//   power    := "^" signed-integer
//
// "s1^-1" is the inverse generator; an omitted twist means [0,0,0];
// whitespace between tokens is insignificant.

namespace belts {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          column(col_) {}
};

namespace detail {

enum class Tok { lbracket, rbracket, comma, lparen, rparen, caret, slash,
                 integer, s1, s2, end };

inline const char* tok_name(Tok t) {
    switch (t) {
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::comma: return "','";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::caret: return "'^'";
        case Tok::slash: return "'/'";
        case Tok::integer: return "integer";
        case Tok::s1: return "'s1'";
        case Tok::s2: return "'s2'";
        case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::int64_t value = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> tokens() {
        std::vector<Token> out;
        for (;;) {
            skip_ws();
            Token t{Tok::end, 0, line_, col_};
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            char c = text_[pos_];
            switch (c) {
                case '[': t.kind = Tok::lbracket; advance(); break;
                case ']': t.kind = Tok::rbracket; advance(); break;
                case ',': t.kind = Tok::comma; advance(); break;
                case '(': t.kind = Tok::lparen; advance(); break;
                case ')': t.kind = Tok::rparen; advance(); break;
                case '^': t.kind = Tok::caret; advance(); break;
                case '/': t.kind = Tok::slash; advance(); break;
                case 's': {
                    advance();
                    if (pos_ < text_.size() &&
                        (text_[pos_] == '1' || text_[pos_] == '2')) {
                        t.kind = text_[pos_] == '1' ? Tok::s1 : Tok::s2;
                        advance();
                    } else {
                        throw ParseError("expected 's1' or 's2'", t.line,
                                         t.column);
                    }
                    break;
                }
                default: {
                    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
                        t.kind = Tok::integer;
                        t.value = lex_integer(t);
                    } else {
                        throw ParseError(std::string("unexpected character '") +
                                             c + "'",
                                         t.line, t.column);
                    }
                }
            }
            out.push_back(t);
        }
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    std::int64_t lex_integer(const Token& at) {
        bool neg = false;
        if (text_[pos_] == '-') {
            neg = true;
            advance();
        }
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected digits after '-'", at.line, at.column);
        std::int64_t v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            advance();
        }
        return neg ? -v : v;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    FramedBraid parse() {
        FramedBraid fb;
        if (peek().kind == Tok::lbracket) fb.twist = parse_twist();
        fb.word = parse_seq();
        expect(Tok::end);
        return fb;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }

    Token take() { return toks_[pos_++]; }

    Token expect(Tok kind) {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + tok_name(kind) +
                                 ", got " + tok_name(peek().kind),
                             peek().line, peek().column);
        return take();
    }

    // Half-units. Only denominator 2 is accepted.
    std::int64_t parse_rational() {
        Token num = expect(Tok::integer);
        if (peek().kind == Tok::slash) {
            take();
            Token den = expect(Tok::integer);
            if (den.value != 2)
                throw ParseError("only denominator 2 is allowed", den.line,
                                 den.column);
            return num.value;
        }
        return 2 * num.value;
    }

    TwistWord parse_twist() {
        expect(Tok::lbracket);
        TwistWord t;
        t.halves[0] = parse_rational();
        expect(Tok::comma);
        t.halves[1] = parse_rational();
        expect(Tok::comma);
        t.halves[2] = parse_rational();
        expect(Tok::rbracket);
        return t;
    }

    BraidWord parse_seq() {
        BraidWord w;
        for (;;) {
            BraidWord atom;
            if (peek().kind == Tok::s1 || peek().kind == Tok::s2) {
                Token t = take();
                atom.push_back(t.kind == Tok::s1 ? s1 : s2);
            } else if (peek().kind == Tok::lparen) {
                take();
                atom = parse_seq();
                expect(Tok::rparen);
            } else {
                return w;
            }
            if (peek().kind == Tok::caret) {
                take();
                Token p = expect(Tok::integer);
                BraidWord expanded;
                BraidWord base = p.value < 0 ? word_inverse(atom) : atom;
                std::int64_t n = p.value < 0 ? -p.value : p.value;
                for (std::int64_t i = 0; i < n; ++i)
                    expanded = word_concat(expanded, base);
                atom = std::move(expanded);
            }
            w = word_concat(w, atom);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline FramedBraid parse_expression(const std::string& text) {
    detail::Lexer lex(text);
    detail::Parser parser(lex.tokens());
    return parser.parse();
}

inline std::string render_generator(Generator g) {
    std::string s = g.index == 1 ? "s1" : "s2";
    if (g.sign < 0) s += "^-1";
    return s;
}

// Canonical flat rendering: explicit twist prefix, one token per letter,
// no powers. parse_expression(render_expression(fb)) == fb.
inline std::string render_expression(const FramedBraid& fb) {
    std::string out = "[" + half_display(fb.twist.halves[0]) + "," +
                      half_display(fb.twist.halves[1]) + "," +
                      half_display(fb.twist.halves[2]) + "]";
    for (Generator g : fb.word) out += " " + render_generator(g);
    return out;
}

}  // namespace belts

#endif
