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

#ifndef SHIFTALG_POLY_HPP
#define SHIFTALG_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "shiftalg/gaussian_rational.hpp"

namespace shiftalg {

/// Dense univariate polynomial over the Gaussian rationals; coeffs()[k] is the
/// coefficient of z^k. The highest stored coefficient is never zero, so the
/// zero polynomial has an empty coefficient list.
class Poly {
   public:
    Poly() = default;
    Poly(GaussianRational constant);  // NOLINT: constants convert implicitly
    Poly(long constant) : Poly(GaussianRational(constant)) {}  // NOLINT
    explicit Poly(std::vector<GaussianRational> coeffs);
    Poly(std::initializer_list<GaussianRational> coeffs) : Poly(std::vector<GaussianRational>(coeffs)) {}

    static Poly monomial(std::size_t power, GaussianRational coeff = 1);
    /// The polynomial z.
    static Poly z() { return monomial(1); }

    const std::vector<GaussianRational>& coeffs() const noexcept { return c_; }
    /// Coefficient of z^k, zero beyond the degree.
    GaussianRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    GaussianRational operator()(const GaussianRational& x) const;
    Poly derivative(unsigned k = 1) const;
    /// Coefficients of p(center + w) in powers of w.
    Poly taylor_shift(const GaussianRational& center) const;
    /// p(z) * z^k.
    Poly shifted_up(std::size_t k) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussianRational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
    friend Poly operator*(const GaussianRational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly pow(unsigned n) const;

    /// Coefficient vector padded (or checked) to exactly `len` entries; throws
    /// InvalidArgument if the degree does not fit.
    std::vector<GaussianRational> padded(std::size_t len) const;

    /// Human-readable expression text in the CLI grammar, e.g. "1 - 3/2*z + 1/2*z^2".
    std::string str() const;

   private:
    void trim();
    std::vector<GaussianRational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Long division; den must be nonzero.
DivMod divmod(const Poly& num, const Poly& den);

/// num / (z - root); throws NonzeroRemainder unless root is a zero of num.
Poly exact_div(const Poly& num, const GaussianRational& root);

/// num / den for a general divisor; throws NonzeroRemainder unless den | num.
Poly exact_div(const Poly& num, const Poly& den);

}  // namespace shiftalg

#endif
