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

#include "shiftalg/operators.hpp"

#include <algorithm>

#include "shiftalg/errors.hpp"

namespace shiftalg {

G0Config::G0Config(FactoredPoly p, GaussianRational lambda_q)
    : p_(std::move(p)), lambda_q_(std::move(lambda_q)), g0_(expand(p_)) {
    if (!g0_(0).is_one()) throw InvalidArgument("g0(0) must equal 1");
}

Poly gbs_apply(const G0Config& cfg, const Poly& f) {
    // g0(0) = 1, so the numerator vanishes at 0 and the division is exact.
    return exact_div(f - cfg.g0() * f.coeff(0), GaussianRational(0));
}

Poly gbs_power(const G0Config& cfg, const Poly& f, unsigned n) {
    Poly r = f;
    for (unsigned k = 0; k < n && !r.is_zero(); ++k) r = gbs_apply(cfg, r);
    return r;
}

Poly backward_shift(const Poly& f) { return exact_div(f - Poly(f.coeff(0)), GaussianRational(0)); }

Poly m_apply(const Poly& f) { return f.shifted_up(1); }

BivarPoly dz_bivar(const Poly& f) {
    return exact_div_t_minus_z(BivarPoly::in_t(f) - BivarPoly::in_z(f));
}

Poly dz_at(const Poly& f, const GaussianRational& z0) { return exact_div(f - Poly(f(z0)), z0); }

BivarPoly shift_apply(const G0Config& cfg, const Poly& f) {
    const Poly mf = m_apply(f);
    BivarPoly num = BivarPoly::outer(mf, cfg.g0()) - BivarPoly::outer(cfg.g0(), mf);
    return exact_div_t_minus_z(num);
}

BivarPoly tilde_shift_apply(const G0Config& cfg, const Poly& f) {
    BivarPoly num = BivarPoly::outer(f, cfg.g0()) - BivarPoly::outer(cfg.g0(), f);
    return exact_div_t_minus_z(num);
}

Matrix gbs_power_matrix(const G0Config& cfg, unsigned n, std::size_t N) {
    const std::size_t rows = std::max<std::size_t>(N, cfg.degree()) + 1;
    Matrix m(rows, N + 1);
    for (std::size_t i = 0; i <= N; ++i) m.set_column(i, coeff_vector(gbs_power(cfg, Poly::monomial(i), n), rows));
    return m;
}

}  // namespace shiftalg
