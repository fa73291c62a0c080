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

#ifndef SHIFTALG_DUHAMEL_HPP
#define SHIFTALG_DUHAMEL_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "shiftalg/audit_report.hpp"
#include "shiftalg/errors.hpp"
#include "shiftalg/factored_poly.hpp"
#include "shiftalg/functional.hpp"
#include "shiftalg/jet.hpp"
#include "shiftalg/linalg.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

/// P with P(0) = 1 and the expansion point lambda of the holomorphic side.
class DuhamelConfig {
   public:
    explicit DuhamelConfig(FactoredPoly p, GaussianRational lambda = 0);

    const FactoredPoly& factored() const noexcept { return factored_; }
    const Poly& P() const noexcept { return p_; }
    const GaussianRational& lambda() const noexcept { return lambda_; }
    /// deg P
    unsigned m() const noexcept { return static_cast<unsigned>(std::max(p_.degree(), 0)); }

   private:
    FactoredPoly factored_;
    Poly p_;
    GaussianRational lambda_;
};

/// G_f is singular on N-jets; carries P(D)(f)(lambda) for reporting.
class SingularJetMatrix : public MathError {
   public:
    explicit SingularJetMatrix(GaussianRational criterion)
        : MathError("Duhamel jet matrix is singular (P(D)(f)(lambda) = " + criterion.str() + ")"),
          criterion_(std::move(criterion)) {}
    const GaussianRational& criterion() const noexcept { return criterion_; }

   private:
    GaussianRational criterion_;
};

struct PjPolys {
    std::vector<Poly> p;        // (P(t) - P(z)) / (t - z) = sum_j p_j(t) z^j
    std::vector<Poly> p_tilde;  // t p_j(t)
};

/// Both lists are empty for constant P.
PjPolys pj_polys(const Poly& P);

/// sum_j b_j f^(j) for P = sum_j b_j u^j.
Poly pd_apply(const Poly& P, const Poly& f);
/// Jet version; output order is f.order - deg P (OrderTooSmall when negative).
Jet pd_apply(const Poly& P, const Jet& f);

/// Generalized Duhamel product
///   h(lambda) P(D)f(z) + int_lambda^z P(D)f(xi) h'(z + lambda - xi) dxi
///     - sum_j ptilde_j(D)f(z) h^(j)(lambda),
/// segment integrals evaluated by the monomial rule
///   int (xi-lambda)^a (z-xi)^b dxi = a! b! / (a+b+1)! (z-lambda)^(a+b+1).
/// Requires both centers equal to lambda, f.order >= m and h.order >= m - 1.
/// Result order is min(f.order - m, h.order).
Jet duhamel_product(const DuhamelConfig& cfg, const Jet& f, const Jet& h);

/// The same product after integration by parts:
///   P(D)f(lambda) h(z) + int_lambda^z (P(D)f)'(eta) h(z + lambda - eta) deta - sum_j ...
/// Kept as an independent cross-check of duhamel_product.
Jet duhamel_product_by_parts(const DuhamelConfig& cfg, const Jet& f, const Jet& h);

/// P(D)(f)(lambda), the invertibility criterion value.
GaussianRational duhamel_criterion(const DuhamelConfig& cfg, const Jet& f);

/// (N+1) x (N+1) matrix of h -> f * h on N-jets; column j is f * (z - lambda)^j.
/// Requires N >= m - 1 and f.order >= N + m. Columns are computed in parallel.
Matrix duhamel_matrix(const DuhamelConfig& cfg, const Jet& f, std::size_t N);

namespace serial {
Matrix duhamel_matrix(const DuhamelConfig& cfg, const Jet& f, std::size_t N);
}  // namespace serial

/// h with f * h = g through order N (residual checked exactly).
/// Throws SingularJetMatrix.
Jet duhamel_invert(const DuhamelConfig& cfg, const Jet& f, const Jet& g, std::size_t N);

/// Criterion value against invertibility of the N-jet matrix. When a witness h
/// is given, f * h is reported as well.
AuditReport wigley_check(const DuhamelConfig& cfg, const Jet& f, std::size_t N,
                         const std::optional<Jet>& witness = std::nullopt);

/// Transform of phi (x) psi against the product of the transforms, as exact
/// N-jets at 0. Requires lambda = 0.
AuditReport duality_bridge(const DuhamelConfig& cfg, const Functional& phi, const Functional& psi, std::size_t N);

}  // namespace shiftalg

#endif
