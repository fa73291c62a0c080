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

#ifndef SHIFTALG_OPERATORS_HPP
#define SHIFTALG_OPERATORS_HPP

#include <cstddef>

#include "shiftalg/bivar_poly.hpp"
#include "shiftalg/factored_poly.hpp"
#include "shiftalg/gaussian_rational.hpp"
#include "shiftalg/linalg.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

/// Generator data of the generalized backward shift. On the polynomial side the
/// exponential factor is fixed to e^{0 z}, so g0 = expand(P) and g0(0) = 1.
/// lambda_q is carried for the jet (holomorphic) side only.
class G0Config {
   public:
    explicit G0Config(FactoredPoly p, GaussianRational lambda_q = 0);

    const FactoredPoly& P() const noexcept { return p_; }
    const GaussianRational& lambda_q() const noexcept { return lambda_q_; }
    const Poly& g0() const noexcept { return g0_; }
    unsigned degree() const noexcept { return p_.degree(); }

   private:
    FactoredPoly p_;
    GaussianRational lambda_q_;
    Poly g0_;
};

/// (f(t) - g0(t) f(0)) / t.
Poly gbs_apply(const G0Config& cfg, const Poly& f);
/// n-fold gbs_apply.
Poly gbs_power(const G0Config& cfg, const Poly& f, unsigned n);
/// Plain backward shift (f(t) - f(0)) / t.
Poly backward_shift(const Poly& f);
/// z f(z); an exact right inverse of gbs_apply.
Poly m_apply(const Poly& f);

/// (f(t) - f(z)) / (t - z).
BivarPoly dz_bivar(const Poly& f);
/// (f(t) - f(z0)) / (t - z0) as a polynomial in t.
Poly dz_at(const Poly& f, const GaussianRational& z0);

/// (t f(t) g0(z) - z f(z) g0(t)) / (t - z).
BivarPoly shift_apply(const G0Config& cfg, const Poly& f);
/// (f(t) g0(z) - f(z) g0(t)) / (t - z).
BivarPoly tilde_shift_apply(const G0Config& cfg, const Poly& f);

/// Matrix of gbs_power(., n) from C[z]_N to C[z]_max(N, deg g0), columns
/// indexed by monomials z^0..z^N.
Matrix gbs_power_matrix(const G0Config& cfg, unsigned n, std::size_t N);

/// Coefficient vector of p padded to `len`; throws InvalidArgument if it does not fit.
inline Vector coeff_vector(const Poly& p, std::size_t len) { return p.padded(len); }
inline Poly poly_of(const Vector& v) { return Poly(v); }

}  // namespace shiftalg

#endif
