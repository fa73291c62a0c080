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

#include "shiftalg/gaussian_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "shiftalg/errors.hpp"

namespace shiftalg {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.norm();
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

GaussianRational GaussianRational::pow(unsigned n) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

std::string GaussianRational::str() const {
    if (is_real()) return re_.get_str();
    std::string im = im_.get_str() + "*i";
    if (sgn(re_) == 0) return im;
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

namespace {

class RationalScanner {
   public:
    explicit RationalScanner(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    std::size_t pos() const { return pos_; }

    mpz_class digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected digits", start);
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    mpq_class rational() {
        mpz_class num = digits();
        mpz_class den = 1;
        if (accept('/')) {
            std::size_t at = pos_;
            den = digits();
            if (den == 0) throw SyntaxError("zero denominator", at);
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    RationalScanner sc(text);
    mpq_class re = 0, im = 0;
    bool have_re = false, have_im = false, first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.accept('+')) {
        } else if (sc.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw SyntaxError("expected '+' or '-'", sc.pos());
        }
        first = false;
        mpq_class value = 1;
        bool imaginary = false;
        if (sc.at_digit()) {
            value = sc.rational();
            if (sc.accept('*')) {
                if (!sc.accept('i')) throw SyntaxError("expected 'i' after '*'", sc.pos());
                imaginary = true;
            } else if (sc.accept('i')) {
                imaginary = true;
            }
        } else if (sc.accept('i')) {
            imaginary = true;
        } else {
            throw SyntaxError("expected a rational or 'i'", sc.pos());
        }
        if (imaginary) {
            if (have_im) throw SyntaxError("duplicate imaginary part", sc.pos());
            have_im = true;
            im = sign * value;
        } else {
            if (have_re || have_im) throw SyntaxError("real part must come first and only once", sc.pos());
            have_re = true;
            re = sign * value;
        }
    }
    if (!have_re && !have_im) throw SyntaxError("empty number", 0);
    return {re, im};
}

GaussianRational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return GaussianRational(mpq_class(f));
}

GaussianRational falling_factorial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class f = 1;
    for (unsigned j = 0; j < k; ++j) f *= (n - j);
    return GaussianRational(mpq_class(f));
}

GaussianRational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return GaussianRational(mpq_class(b));
}

}  // namespace shiftalg
