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

#ifndef SHIFTALG_BIVAR_POLY_HPP
#define SHIFTALG_BIVAR_POLY_HPP

#include <cstddef>
#include <vector>

#include "shiftalg/gaussian_rational.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

/// Dense polynomial in two variables (t, z); coeff(i, j) multiplies t^i z^j.
/// Storage is trimmed to exact dimensions: the last row and the last column
/// each contain a nonzero entry; the zero polynomial is 0 x 0.
class BivarPoly {
   public:
    BivarPoly() = default;
    explicit BivarPoly(std::vector<std::vector<GaussianRational>> rows);

    /// a(t) * b(z).
    static BivarPoly outer(const Poly& in_t, const Poly& in_z);
    /// p(t) as a bivariate polynomial (no z dependence).
    static BivarPoly in_t(const Poly& p) { return outer(p, Poly(1)); }
    /// p(z) as a bivariate polynomial (no t dependence).
    static BivarPoly in_z(const Poly& p) { return outer(Poly(1), p); }

    std::size_t t_size() const noexcept { return rows_.size(); }
    std::size_t z_size() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
    GaussianRational coeff(std::size_t i, std::size_t j) const;
    bool is_zero() const noexcept { return rows_.empty(); }

    /// Coefficient of t^i as a polynomial in z.
    Poly t_coeff(std::size_t i) const;
    /// Substitute t = value; result is a polynomial in z.
    Poly at_t(const GaussianRational& value) const;
    /// Substitute z = value; result is a polynomial in t.
    Poly at_z(const GaussianRational& value) const;
    /// Substitute t = z.
    Poly diagonal() const;
    /// Exchange the roles of t and z.
    BivarPoly swapped() const;
    /// Multiply by t.
    BivarPoly times_t() const;

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) = default;

   private:
    void trim();
    std::vector<std::vector<GaussianRational>> rows_;
};

/// num / (t - z); throws NonzeroRemainder unless num vanishes on the diagonal t = z.
BivarPoly exact_div_t_minus_z(const BivarPoly& num);

}  // namespace shiftalg

#endif
