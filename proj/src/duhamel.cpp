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

#include "shiftalg/duhamel.hpp"

#include <algorithm>

#include "shiftalg/bivar_poly.hpp"
#include "shiftalg/exp_poly.hpp"
#include "shiftalg/io.hpp"
#include "shiftalg/operators.hpp"
#include "shiftalg/parallel.hpp"

namespace shiftalg {

DuhamelConfig::DuhamelConfig(FactoredPoly p, GaussianRational lambda)
    : factored_(std::move(p)), p_(expand(factored_)), lambda_(std::move(lambda)) {}

PjPolys pj_polys(const Poly& P) {
    PjPolys out;
    if (P.degree() < 1) return out;
    const BivarPoly q = exact_div_t_minus_z(BivarPoly::in_t(P) - BivarPoly::in_z(P));
    const BivarPoly by_z = q.swapped();
    for (int j = 0; j < P.degree(); ++j) {
        out.p.push_back(by_z.t_coeff(static_cast<std::size_t>(j)));
        out.p_tilde.push_back(out.p.back().shifted_up(1));
    }
    return out;
}

Poly pd_apply(const Poly& P, const Poly& f) {
    Poly acc;
    for (std::size_t j = 0; j < P.coeffs().size(); ++j) acc += f.derivative(static_cast<unsigned>(j)) * P.coeffs()[j];
    return acc;
}

namespace {

// r(D) f as a jet of the given output order; needs f.order >= out_order + deg r.
Jet diff_op(const Poly& r, const Jet& f, unsigned out_order) {
    if (r.degree() >= 0 && f.order() < out_order + static_cast<unsigned>(r.degree()))
        throw OrderTooSmall("differential operator needs a longer jet");
    std::vector<GaussianRational> c(out_order + 1);
    for (std::size_t j = 0; j < r.coeffs().size(); ++j) {
        if (r.coeffs()[j].is_zero()) continue;
        for (unsigned n = 0; n <= out_order; ++n)
            c[n] += r.coeffs()[j] * f[n + j] * falling_factorial(static_cast<unsigned>(n + j), static_cast<unsigned>(j));
    }
    return Jet(f.center(), std::move(c));
}

// Coefficients n = 1..order of int_lambda^z U(xi) H(z + lambda - xi) dxi, with U
// and H given in powers of (xi - lambda) and (w - lambda).
std::vector<GaussianRational> segment_convolution(const std::vector<GaussianRational>& u,
                                                  const std::vector<GaussianRational>& h, unsigned order) {
    std::vector<GaussianRational> c(order + 1);
    for (unsigned n = 1; n <= order; ++n) {
        const GaussianRational inv = GaussianRational(1) / factorial(n);
        for (unsigned a = 0; a < n; ++a) {
            const unsigned b = n - 1 - a;
            if (a >= u.size() || b >= h.size() || u[a].is_zero() || h[b].is_zero()) continue;
            c[n] += u[a] * h[b] * factorial(a) * factorial(b) * inv;
        }
    }
    return c;
}

struct ProductSetup {
    unsigned m;
    unsigned order;
};

ProductSetup check_product(const DuhamelConfig& cfg, const Jet& f, const Jet& h) {
    if (f.center() != cfg.lambda() || h.center() != cfg.lambda()) throw CenterMismatch();
    const unsigned m = cfg.m();
    if (f.order() < m) throw OrderTooSmall("f needs order >= deg P");
    if (m >= 1 && h.order() + 1 < m) throw OrderTooSmall("h needs order >= deg P - 1");
    return {m, std::min(f.order() - m, h.order())};
}

Jet correction_sum(const DuhamelConfig& cfg, const Jet& f, const Jet& h, unsigned order) {
    Jet acc(cfg.lambda(), order);
    const PjPolys pj = pj_polys(cfg.P());
    for (std::size_t j = 0; j < pj.p_tilde.size(); ++j) {
        const GaussianRational hj = h.derivative_at_center(static_cast<unsigned>(j));
        if (hj.is_zero()) continue;
        acc = acc + hj * diff_op(pj.p_tilde[j], f, order);
    }
    return acc;
}

}  // namespace

Jet pd_apply(const Poly& P, const Jet& f) {
    const unsigned m = static_cast<unsigned>(std::max(P.degree(), 0));
    if (f.order() < m) throw OrderTooSmall("jet order below deg P");
    return diff_op(P, f, f.order() - m);
}

Jet duhamel_product(const DuhamelConfig& cfg, const Jet& f, const Jet& h) {
    const auto [m, order] = check_product(cfg, f, h);
    const Jet u = diff_op(cfg.P(), f, order);
    std::vector<GaussianRational> c(order + 1);
    for (unsigned n = 0; n <= order; ++n) c[n] = h[0] * u[n];
    if (order >= 1) {
        const Jet dh = h.derivative();
        const auto integral = segment_convolution(u.coeffs(), dh.coeffs(), order);
        for (unsigned n = 1; n <= order; ++n) c[n] += integral[n];
    }
    return Jet(cfg.lambda(), std::move(c)) - correction_sum(cfg, f, h, order);
}

Jet duhamel_product_by_parts(const DuhamelConfig& cfg, const Jet& f, const Jet& h) {
    const auto [m, order] = check_product(cfg, f, h);
    const Jet u = diff_op(cfg.P(), f, f.order() - m);
    std::vector<GaussianRational> c(order + 1);
    for (unsigned n = 0; n <= order; ++n) c[n] = u[0] * h[n];
    if (order >= 1) {
        const Jet du = u.derivative();
        const auto integral = segment_convolution(du.coeffs(), h.coeffs(), order);
        for (unsigned n = 1; n <= order; ++n) c[n] += integral[n];
    }
    return Jet(cfg.lambda(), std::move(c)) - correction_sum(cfg, f, h, order);
}

GaussianRational duhamel_criterion(const DuhamelConfig& cfg, const Jet& f) {
    if (f.center() != cfg.lambda()) throw CenterMismatch();
    return pd_apply(cfg.P(), f)[0];
}

namespace {

void check_matrix_orders(const DuhamelConfig& cfg, const Jet& f, std::size_t N) {
    if (N + 1 < cfg.m()) throw OrderTooSmall("jet matrix needs N >= deg P - 1");
    if (f.order() < N + cfg.m()) throw OrderTooSmall("jet matrix needs f.order >= N + deg P");
}

Vector duhamel_column(const DuhamelConfig& cfg, const Jet& f, std::size_t N, std::size_t j) {
    std::vector<GaussianRational> e(N + 1);
    e[j] = 1;
    return duhamel_product(cfg, f, Jet(cfg.lambda(), std::move(e))).truncated(static_cast<unsigned>(N)).coeffs();
}

}  // namespace

Matrix duhamel_matrix(const DuhamelConfig& cfg, const Jet& f, std::size_t N) {
    check_matrix_orders(cfg, f, N);
    std::vector<Vector> cols(N + 1);
    parallel_for(N + 1, [&](std::size_t j) { cols[j] = duhamel_column(cfg, f, N, j); });
    return Matrix::from_columns(cols, N + 1);
}

Matrix serial::duhamel_matrix(const DuhamelConfig& cfg, const Jet& f, std::size_t N) {
    check_matrix_orders(cfg, f, N);
    Matrix m(N + 1, N + 1);
    for (std::size_t j = 0; j <= N; ++j) m.set_column(j, duhamel_column(cfg, f, N, j));
    return m;
}

Jet duhamel_invert(const DuhamelConfig& cfg, const Jet& f, const Jet& g, std::size_t N) {
    if (g.center() != cfg.lambda()) throw CenterMismatch();
    if (g.order() < N) throw OrderTooSmall("g needs order >= N");
    const Matrix a = duhamel_matrix(cfg, f, N);
    if (determinant(a).is_zero()) throw SingularJetMatrix(duhamel_criterion(cfg, f));
    const Jet target = g.truncated(static_cast<unsigned>(N));
    const Jet h(cfg.lambda(), solve(a, target.coeffs()));
    if (duhamel_product(cfg, f, h).truncated(static_cast<unsigned>(N)) != target)
        throw std::logic_error("Duhamel inversion residual is nonzero");
    return h;
}

namespace {

io::json duhamel_cfg_json(const DuhamelConfig& cfg) {
    return {{"P", io::to_json(cfg.factored())}, {"lambdaQ", cfg.lambda().str()}};
}

}  // namespace

AuditReport wigley_check(const DuhamelConfig& cfg, const Jet& f, std::size_t N, const std::optional<Jet>& witness) {
    AuditReport r;
    r.claim_id = "duhamel-criterion";
    r.cfg = duhamel_cfg_json(cfg);
    r.inputs["f"] = io::to_json(f);
    r.inputs["order"] = N;
    const GaussianRational crit = duhamel_criterion(cfg, f);
    const Matrix a = duhamel_matrix(cfg, f, N);
    const GaussianRational det = determinant(a);
    r.observed["criterion"] = crit.str();
    r.observed["determinant"] = det.str();
    r.observed["invertible"] = !det.is_zero();
    io::json witnesses = io::json::array();
    for (const auto& v : nullspace(a)) witnesses.push_back(io::to_json(Jet(cfg.lambda(), v)));
    r.observed["kernel_witnesses"] = witnesses;
    if (witness) {
        r.inputs["witness"] = io::to_json(*witness);
        Jet prod = duhamel_product(cfg, f, *witness);
        if (prod.order() > N) prod = prod.truncated(static_cast<unsigned>(N));
        r.observed["witness_product"] = io::to_json(prod);
        r.observed["witness_product_zero"] = prod.is_zero();
    }
    r.paper_prediction = "G_f is an isomorphism iff P(D)(f)(lambda) != 0";
    r.agree = (!crit.is_zero()) == (!det.is_zero());
    return r;
}

AuditReport duality_bridge(const DuhamelConfig& cfg, const Functional& phi, const Functional& psi, std::size_t N) {
    if (!cfg.lambda().is_zero()) throw InvalidArgument("duality bridge requires lambda = 0");
    AuditReport r;
    r.claim_id = "duality-bridge";
    r.cfg = duhamel_cfg_json(cfg);
    r.phi = io::to_json(phi);
    r.inputs["psi"] = io::to_json(psi);
    r.inputs["order"] = N;
    const G0Config g0cfg(cfg.factored());
    const auto n = static_cast<unsigned>(N);
    const Jet lhs = jet_of_exppoly(fourier_laplace(otimes(g0cfg, phi, psi)), n);
    const Jet rhs = duhamel_product(cfg, jet_of_exppoly(fourier_laplace(phi), n + cfg.m()),
                                    jet_of_exppoly(fourier_laplace(psi), n));
    r.observed["transform_of_product"] = io::to_json(lhs);
    r.observed["product_of_transforms"] = io::to_json(rhs);
    r.paper_prediction = "F(phi (x) psi) = F(phi) * F(psi)";
    r.agree = lhs == rhs;
    return r;
}

}  // namespace shiftalg
