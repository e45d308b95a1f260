#pragma once

#include "chernum/geommodel.hpp"
#include "chernum/partition.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chernum::dsl {

// Grammar:
//   manifold  := "CP" "(" nat ")" { "*" manifold } | "pt"
//   bundle    := atom { "+" atom }
//   atom      := "O" "(" int { "," int } ")" | "tau" | "nu" | "conj" "(" bundle ")"
//   partition := "[" nat { "," nat } "]"   (also the empty "[]")
// Whitespace is ignored between tokens. parse -> print -> parse is the
// identity on canonical forms.

inline constexpr int kMaxFactorDim = 12;

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

namespace detail {

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t offset() const { return pos_; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) return false;
        // keywords must not run into an identifier tail
        std::size_t end = pos_ + w.size();
        if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])))) return false;
        pos_ = end;
        return true;
    }
    int parse_nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected natural number", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw ParseError("number out of range", pos_);
            ++pos_;
        }
        return static_cast<int>(v);
    }
    int parse_int() {
        skip_ws();
        bool neg = accept('-');
        int v = parse_nat();
        return neg ? -v : v;
    }
    void expect_end() {
        if (!done()) throw ParseError("unexpected trailing input", pos_);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline geom::Bundle parse_bundle_expr(Cursor& c);

inline geom::Bundle parse_bundle_atom(Cursor& c) {
    if (c.accept_word("conj")) {
        c.expect('(');
        geom::Bundle inner = parse_bundle_expr(c);
        c.expect(')');
        return inner.conjugate();
    }
    if (c.accept_word("tau")) return geom::Bundle::tau();
    if (c.accept_word("nu")) return geom::Bundle::nu();
    if (c.accept_word("O")) {
        c.expect('(');
        std::vector<int> deg;
        deg.push_back(c.parse_int());
        while (c.accept(',')) deg.push_back(c.parse_int());
        c.expect(')');
        return geom::Bundle::line(std::move(deg));
    }
    throw ParseError("expected bundle ('O(...)', 'tau', 'nu' or 'conj(...)')", c.offset());
}

inline geom::Bundle parse_bundle_expr(Cursor& c) {
    geom::Bundle b = parse_bundle_atom(c);
    while (c.accept('+')) b = b + parse_bundle_atom(c);
    return b;
}

}  // namespace detail

inline geom::ProjProduct parse_manifold(std::string_view text) {
    detail::Cursor c(text);
    std::vector<int> dims;
    if (c.accept_word("pt")) {
        c.expect_end();
        return geom::ProjProduct{};
    }
    while (true) {
        if (c.accept_word("pt")) {
            // the point is the empty factor
        } else if (c.accept_word("CP")) {
            c.expect('(');
            std::size_t at = c.offset();
            int n = c.parse_nat();
            if (n > kMaxFactorDim) throw ParseError("dimension bound exceeded", at);
            c.expect(')');
            dims.push_back(n);
        } else {
            throw ParseError("expected 'CP(n)' or 'pt'", c.offset());
        }
        if (!c.accept('*')) break;
    }
    c.expect_end();
    return geom::ProjProduct(std::move(dims));
}

inline geom::Bundle parse_bundle(std::string_view text) {
    detail::Cursor c(text);
    geom::Bundle b = detail::parse_bundle_expr(c);
    c.expect_end();
    return b;
}

inline symfunc::Partition parse_partition(std::string_view text) {
    detail::Cursor c(text);
    c.expect('[');
    std::vector<int> parts;
    if (!c.peek(']')) {
        while (true) {
            std::size_t at = c.offset();
            int p = c.parse_nat();
            if (p == 0) throw ParseError("partition parts must be positive", at);
            parts.push_back(p);
            if (!c.accept(',')) break;
        }
    }
    c.expect(']');
    c.expect_end();
    return symfunc::Partition(std::move(parts));
}

}  // namespace chernum::dsl
