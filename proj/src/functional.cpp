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

#include "shiftalg/functional.hpp"

#include <algorithm>

#include "shiftalg/errors.hpp"
#include "shiftalg/linalg.hpp"
#include "shiftalg/parallel.hpp"

namespace shiftalg {

namespace {

bool atom_less(const Atom& a, const Atom& b) {
    if (a.point != b.point) return a.point < b.point;
    return a.order < b.order;
}

}  // namespace

Functional::Functional(std::vector<Atom> atoms) : atoms_(std::move(atoms)) { normalize(); }

void Functional::normalize() {
    std::stable_sort(atoms_.begin(), atoms_.end(), atom_less);
    std::vector<Atom> merged;
    for (auto& a : atoms_) {
        if (!merged.empty() && merged.back().point == a.point && merged.back().order == a.order)
            merged.back().coeff += a.coeff;
        else
            merged.push_back(std::move(a));
    }
    std::erase_if(merged, [](const Atom& a) { return a.coeff.is_zero(); });
    atoms_ = std::move(merged);
}

Functional Functional::delta(const GaussianRational& point, unsigned order, const GaussianRational& coeff) {
    return Functional({Atom{point, order, coeff}});
}

unsigned Functional::max_order() const noexcept {
    unsigned m = 0;
    for (const auto& a : atoms_) m = std::max(m, a.order);
    return m;
}

std::vector<GaussianRational> Functional::support() const {
    std::vector<GaussianRational> pts;
    for (const auto& a : atoms_)
        if (pts.empty() || pts.back() != a.point) pts.push_back(a.point);
    return pts;
}

GaussianRational Functional::apply(const Poly& f) const {
    GaussianRational acc;
    for (const auto& a : atoms_) acc += a.coeff * f.derivative(a.order)(a.point);
    return acc;
}

Poly Functional::apply_t(const BivarPoly& f) const {
    Poly acc;
    for (const auto& a : atoms_) {
        GaussianRational power = 1;  // point^(i - order)
        for (std::size_t i = a.order; i < f.t_size(); ++i) {
            const GaussianRational w = a.coeff * falling_factorial(static_cast<unsigned>(i), a.order) * power;
            acc += f.t_coeff(i) * w;
            power *= a.point;
        }
    }
    return acc;
}

Functional& Functional::operator+=(const Functional& o) {
    atoms_.insert(atoms_.end(), o.atoms_.begin(), o.atoms_.end());
    normalize();
    return *this;
}

Functional operator*(const Functional& a, const GaussianRational& s) {
    std::vector<Atom> atoms = a.atoms_;
    for (auto& x : atoms) x.coeff *= s;
    return Functional(std::move(atoms));
}

std::string Functional::str() const {
    if (atoms_.empty()) return "0";
    std::string out;
    for (std::size_t n = 0; n < atoms_.size(); ++n) {
        const Atom& a = atoms_[n];
        std::string term = "delta(" + a.point.str() + "," + std::to_string(a.order) + ")";
        if (a.coeff.is_real()) {
            const bool neg = sgn(a.coeff.re()) < 0;
            const mpq_class mag = abs(a.coeff.re());
            if (mag != 1) term = mag.get_str() + "*" + term;
            out += neg ? "-" : (n ? "+" : "");
        } else {
            term = "(" + a.coeff.str() + ")*" + term;
            if (n) out += "+";
        }
        out += term;
    }
    return out;
}

Functional delta_q(const FactoredPoly& q) {
    if (q.is_constant()) throw ConstantPolynomial();
    std::vector<Atom> atoms;
    for (const auto& f : q.factors())
        for (unsigned k = 0; k < f.mult; ++k) atoms.push_back({f.root, k, 1});
    return Functional(std::move(atoms));
}

Functional compose_with_power(const Functional& phi, unsigned power) {
    // Leibniz: (z^s f)^(k)(mu) = sum_i C(k,i) (z^s)^(i)(mu) f^(k-i)(mu).
    std::vector<Atom> atoms;
    for (const auto& a : phi.atoms())
        for (unsigned i = 0; i <= a.order && i <= power; ++i) {
            GaussianRational w = a.coeff * binomial(a.order, i) * falling_factorial(power, i) * a.point.pow(power - i);
            atoms.push_back({a.point, a.order - i, w});
        }
    return Functional(std::move(atoms));
}

GaussianRational convolution_moment(const G0Config& cfg, const Functional& phi, const Functional& psi,
                                    std::size_t i) {
    return phi.apply(psi.apply_t(shift_apply(cfg, Poly::monomial(i))));
}

std::vector<GaussianRational> convolution_moments(const G0Config& cfg, const Functional& phi, const Functional& psi,
                                                  std::size_t count) {
    std::vector<GaussianRational> m(count);
    parallel_for(count, [&](std::size_t i) { m[i] = convolution_moment(cfg, phi, psi, i); });
    return m;
}

std::vector<GaussianRational> serial::convolution_moments(const G0Config& cfg, const Functional& phi,
                                                          const Functional& psi, std::size_t count) {
    std::vector<GaussianRational> m(count);
    for (std::size_t i = 0; i < count; ++i) m[i] = convolution_moment(cfg, phi, psi, i);
    return m;
}

namespace {

constexpr std::size_t kExtraMoments = 5;
constexpr unsigned kMaxEscalations = 3;

}  // namespace

Functional otimes(const G0Config& cfg, const Functional& phi, const Functional& psi) {
    if (phi.is_zero() || psi.is_zero()) return {};
    std::vector<GaussianRational> points = phi.support();
    for (const auto& p : psi.support()) points.push_back(p);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    unsigned bound = phi.max_order() + psi.max_order() + 1;
    std::vector<GaussianRational> moments;
    for (unsigned attempt = 0; attempt <= kMaxEscalations; ++attempt, ++bound) {
        const std::size_t unknowns = determining_degree(points.size(), bound);
        const std::size_t equations = unknowns + kExtraMoments;
        if (moments.size() < equations) moments = convolution_moments(cfg, phi, psi, equations);
        // Confluent Vandermonde system: column (p, k) holds delta_{p,k}(z^i).
        Matrix a(equations, unknowns);
        std::size_t col = 0;
        for (const auto& p : points)
            for (unsigned k = 0; k <= bound; ++k, ++col) {
                GaussianRational power = 1;  // p^(i - k)
                for (std::size_t i = k; i < equations; ++i) {
                    a(i, col) = falling_factorial(static_cast<unsigned>(i), k) * power;
                    power *= p;
                }
            }
        Vector rhs(moments.begin(), moments.begin() + static_cast<long>(equations));
        try {
            Vector x = solve(a, rhs);
            std::vector<Atom> atoms;
            col = 0;
            for (const auto& p : points)
                for (unsigned k = 0; k <= bound; ++k, ++col) atoms.push_back({p, k, x[col]});
            return Functional(std::move(atoms));
        } catch (const NoSolution&) {
        }
    }
    throw ReconstructionInconsistent(bound - 1);
}

ExpPoly fourier_laplace(const Functional& phi) {
    ExpPoly e;
    for (const auto& a : phi.atoms()) e.add_term(a.point, Poly::monomial(a.order, a.coeff));
    return e;
}

}  // namespace shiftalg
