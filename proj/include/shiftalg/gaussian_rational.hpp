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

#ifndef SHIFTALG_GAUSSIAN_RATIONAL_HPP
#define SHIFTALG_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace shiftalg {

/// Exact complex number re + im*i with arbitrary-precision rational parts.
/// Both parts are always kept in canonical (reduced, positive denominator) form.
class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose, integer literals
    GaussianRational(mpq_class re, mpq_class im = 0);
    GaussianRational(long num, long den) : GaussianRational(mpq_class(num, den)) {}

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    /// Accepts "a", "a/b", "a/b+c/d*i", "-i", "c/d*i", "3+i" with optional signs
    /// and surrounding whitespace. Throws SyntaxError.
    static GaussianRational parse(std::string_view text);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    /// Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Total order (lexicographic on re, then im); used only for canonical sorting.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    /// Integer power, n >= 0.
    GaussianRational pow(unsigned n) const;

    /// Canonical text such as "3/2", "-1", "1/2+3*i" or "-2/3*i". The imaginary
    /// coefficient is always explicit ("1*i", never a bare "i").
    std::string str() const;

   private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// n! as a GaussianRational.
GaussianRational factorial(unsigned n);
/// n!/(n-k)!, zero when k > n.
GaussianRational falling_factorial(unsigned n, unsigned k);
/// Binomial coefficient C(n, k).
GaussianRational binomial(unsigned n, unsigned k);

}  // namespace shiftalg

#endif
