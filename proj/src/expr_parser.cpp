/*
   Copyright 2026 The shiftalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "shiftalg/expr_parser.hpp"

#include <cctype>
#include <string>

#include "shiftalg/errors.hpp"

namespace shiftalg {

namespace {

class Cursor {
   public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }
    std::string_view text() const { return s_; }

    mpz_class digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected digits", start);
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    GaussianRational rational() {
        mpz_class num = digits();
        mpz_class den = 1;
        if (accept('/')) {
            const std::size_t at = pos_;
            den = digits();
            if (den == 0) throw SyntaxError("zero denominator", at);
        }
        return GaussianRational(mpq_class(num, den));
    }

    unsigned small_uint(unsigned limit) {
        const std::size_t at = pos_;
        mpz_class v = digits();
        if (v > limit) throw SyntaxError("integer too large", at);
        return static_cast<unsigned>(v.get_ui());
    }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

constexpr unsigned kMaxExponent = 4096;

class ExprParser {
   public:
    explicit ExprParser(std::string_view s) : c_(s) {}

    Poly parse() {
        if (c_.at_end()) throw SyntaxError("empty expression", c_.pos());
        Poly p = expr();
        if (!c_.at_end()) throw SyntaxError("unexpected character", c_.pos());
        return p;
    }

   private:
    Poly expr() {
        Poly acc = term();
        while (true) {
            if (c_.accept('+'))
                acc += term();
            else if (c_.accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (c_.accept('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        bool negate = false;
        while (true) {
            if (c_.accept('-'))
                negate = !negate;
            else if (!c_.accept('+'))
                break;
        }
        Poly b = base();
        if (c_.accept('^')) b = b.pow(c_.small_uint(kMaxExponent));
        return negate ? -b : b;
    }

    Poly base() {
        const char ch = c_.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) return Poly(c_.rational());
        if (c_.accept('z')) return Poly::z();
        if (c_.accept('i')) return Poly(GaussianRational::i());
        if (c_.accept('(')) {
            Poly p = expr();
            c_.expect(')');
            return p;
        }
        throw SyntaxError(ch ? std::string("unexpected '") + ch + "'" : "unexpected end of input", c_.pos());
    }

    Cursor c_;
};

// Text up to the next top-level `stop` character (parentheses balanced).
std::string_view scan_until(Cursor& c, char stop) {
    c.skip_ws();
    const std::size_t start = c.pos();
    int depth = 0;
    std::size_t p = start;
    const auto s = c.text();
    while (p < s.size() && !(depth == 0 && s[p] == stop)) {
        if (s[p] == '(') ++depth;
        if (s[p] == ')') --depth;
        ++p;
    }
    if (p >= s.size()) throw SyntaxError(std::string("expected '") + stop + "'", p);
    c.set_pos(p);
    return s.substr(start, p - start);
}

GaussianRational parse_embedded(std::string_view text, std::size_t offset) {
    try {
        return GaussianRational::parse(text);
    } catch (const SyntaxError& e) {
        throw SyntaxError("bad number '" + std::string(text) + "'", offset + e.offset());
    }
}

}  // namespace

Poly parse_function(std::string_view src) { return ExprParser(src).parse(); }

Functional parse_functional(std::string_view src) {
    Cursor c(src);
    if (c.at_end()) throw SyntaxError("empty functional", 0);
    if (c.accept('0') && c.at_end()) return {};
    c.set_pos(0);
    std::vector<Atom> atoms;
    bool first = true;
    while (!c.at_end()) {
        GaussianRational sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (!c.accept('+') && !first)
            throw SyntaxError("expected '+' or '-'", c.pos());
        first = false;

        GaussianRational coeff = 1;
        if (c.peek() == '(') {
            c.expect('(');
            const std::size_t at = c.pos();
            coeff = parse_embedded(scan_until(c, ')'), at);
            c.expect(')');
            c.expect('*');
        } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = c.rational();
            c.expect('*');
        }
        if (!c.accept_word("delta")) throw SyntaxError("expected 'delta'", c.pos());
        c.expect('(');
        const std::size_t at = c.pos();
        const GaussianRational point = parse_embedded(scan_until(c, ','), at);
        c.expect(',');
        const unsigned order = c.small_uint(kMaxExponent);
        c.expect(')');
        atoms.push_back({point, order, sign * coeff});
    }
    return Functional(std::move(atoms));
}

FactoredPoly parse_factors(std::string_view src) {
    Cursor c(src);
    if (c.at_end()) return {};
    std::vector<RootFactor> fs;
    while (true) {
        c.skip_ws();
        const std::size_t start = c.pos();
        const auto s = c.text();
        std::size_t p = start;
        while (p < s.size() && s[p] != ':' && s[p] != ',') ++p;
        const GaussianRational root = parse_embedded(s.substr(start, p - start), start);
        c.set_pos(p);
        unsigned mult = 1;
        if (c.accept(':')) {
            const std::size_t at = c.pos();
            mult = c.small_uint(kMaxExponent);
            if (mult == 0) throw SyntaxError("multiplicity must be positive", at);
        }
        fs.push_back({root, mult});
        if (c.at_end()) break;
        c.expect(',');
    }
    return FactoredPoly(std::move(fs));
}

}  // namespace shiftalg
