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

#include "shiftalg/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "shiftalg/commutant.hpp"
#include "shiftalg/duhamel.hpp"
#include "shiftalg/errors.hpp"
#include "shiftalg/exp_poly.hpp"
#include "shiftalg/linalg.hpp"
#include "shiftalg/operators.hpp"

namespace shiftalg {

namespace {

constexpr std::size_t kN = 12;

class Checker {
   public:
    explicit Checker(SuiteResult& r) : r_(r) {}
    void operator()(bool ok, const std::string& what) {
        ++r_.checks;
        if (!ok) r_.failures.push_back(what);
    }

   private:
    SuiteResult& r_;
};

GaussianRational half() { return GaussianRational(1, 2); }

std::string label(const FactoredPoly& p) { return expand(p).str(); }

std::vector<Vector> multiples_basis(const Poly& q, std::size_t count, std::size_t len) {
    std::vector<Vector> b;
    for (std::size_t j = 0; j < count; ++j) b.push_back(coeff_vector(q * Poly::monomial(j), len));
    return b;
}

// Deterministic small random jets for the ring laws.
class JetSource {
   public:
    explicit JetSource(unsigned seed) : rng_(seed) {}
    Jet next(const GaussianRational& center, unsigned order) {
        std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
        std::vector<GaussianRational> c(order + 1);
        for (auto& x : c) x = GaussianRational(mpq_class(num(rng_), den(rng_)));
        return Jet(center, std::move(c));
    }

   private:
    std::mt19937 rng_;
};

Jet cut(const Jet& j, unsigned order) { return j.order() > order ? j.truncated(order) : j; }

std::vector<FactoredPoly> duhamel_generators() {
    std::vector<FactoredPoly> v{FactoredPoly()};
    for (auto& p : standard_generators()) v.push_back(p);
    return v;
}

void kernel_laws(Checker& check) {
    for (const auto& p : standard_generators()) {
        const G0Config cfg(p);
        for (unsigned n = 1; n <= 4; ++n) {
            const auto ker = nullspace(gbs_power_matrix(cfg, n, kN));
            const auto want = multiples_basis(cfg.g0(), n, kN + 1);
            check(ker.size() == n && same_span(ker, want),
                  "Ker D^" + std::to_string(n) + " != g0 C[z]_" + std::to_string(n - 1) + " for g0 = " + label(p));
        }
    }
}

void right_inverse(Checker& check) {
    for (const auto& p : standard_generators()) {
        const G0Config cfg(p);
        for (std::size_t i = 0; i <= kN; ++i) {
            const Poly zi = Poly::monomial(i);
            check(gbs_apply(cfg, m_apply(zi)) == zi, "D M z^" + std::to_string(i) + " != z^i for g0 = " + label(p));
        }
    }
}

void commutant(Checker& check) {
    for (const auto& p : standard_generators()) {
        const G0Config cfg(p);
        for (const auto& phi : functional_pool())
            for (std::size_t i = 0; i <= 8; ++i) {
                const Poly zi = Poly::monomial(i);
                check(bphi_apply(cfg, phi, gbs_apply(cfg, zi)) == gbs_apply(cfg, bphi_apply(cfg, phi, zi)),
                      "B_phi D != D B_phi for phi = " + phi.str() + ", g0 = " + label(p));
            }
    }
}

void algebra_morphism(Checker& check) {
    const auto pool = functional_pool();
    const auto gens = standard_generators();
    std::size_t pair = 0;
    for (const auto& p : gens) {
        const G0Config cfg(p);
        for (std::size_t k = 0; k < 9; ++k, ++pair) {
            const Functional& phi = pool[(3 * pair) % pool.size()];
            const Functional& psi = pool[(5 * pair + 1) % pool.size()];
            const std::string tag = phi.str() + " (x) " + psi.str() + ", g0 = " + label(p);
            const Functional prod = otimes(cfg, phi, psi);
            for (std::size_t i = 0; i <= 8; ++i) {
                const Poly zi = Poly::monomial(i);
                check(bphi_apply(cfg, prod, zi) == bphi_apply(cfg, phi, bphi_apply(cfg, psi, zi)),
                      "B of " + tag + " differs from B_phi B_psi on z^" + std::to_string(i));
            }
            check(prod == otimes(cfg, psi, phi), "not commutative: " + tag);
            if (k % 3 == 0) {
                const Functional& chi = pool[(7 * pair + 2) % pool.size()];
                check(otimes(cfg, prod, chi) == otimes(cfg, phi, otimes(cfg, psi, chi)),
                      "not associative: " + tag + " (x) " + chi.str());
            }
        }
    }
}

void eigen_relation(Checker& check) {
    for (const auto& p : standard_generators()) {
        const G0Config cfg(p);
        for (const auto& phi : functional_pool())
            check(bphi_apply(cfg, phi, cfg.g0()) == phi.apply(cfg.g0()) * cfg.g0(),
                  "B_phi(g0) != phi(g0) g0 for phi = " + phi.str() + ", g0 = " + label(p));
    }
}

void unit_laws(Checker& check) {
    const Functional one = Functional::delta(0, 0);
    for (const auto& p : standard_generators()) {
        const G0Config cfg(p);
        for (std::size_t i = 0; i <= kN; ++i) {
            const Poly zi = Poly::monomial(i);
            check(bphi_apply(cfg, one, zi) == zi, "B_delta(0,0) z^" + std::to_string(i) + " != z^i");
        }
        for (const auto& phi : functional_pool()) {
            check(otimes(cfg, one, phi) == phi, "delta(0,0) (x) " + phi.str() + " != phi, g0 = " + label(p));
            check(otimes(cfg, phi, one) == phi, phi.str() + " (x) delta(0,0) != phi, g0 = " + label(p));
        }
    }
    JetSource src(7);
    for (const auto& p : duhamel_generators())
        for (const auto& lambda : {GaussianRational(0), half()}) {
            const DuhamelConfig cfg(p, lambda);
            const unsigned n = 10;
            const Jet h = src.next(lambda, n + cfg.m());
            const Jet unit = jet_of_poly(Poly(1), lambda, n + cfg.m());
            check(duhamel_product(cfg, unit, h) == cut(h, n), "1 * h != h for P = " + label(p));
            check(cut(duhamel_product(cfg, h, unit), n) == cut(h, n), "h * 1 != h for P = " + label(p));
        }
}

void canonical_kernels(Checker& check) {
    for (const auto& p : standard_generators()) {
        const G0Config cfg(p);
        const std::size_t rows = bphi_rows(cfg, kN);
        for (const auto& q : p.divisors()) {
            if (q.is_constant()) continue;
            // span{P / (z - root)^s} over the zeros of q, s up to their multiplicity in q
            std::vector<Vector> image_span;
            for (const auto& f : q.factors()) {
                Poly quotient = cfg.g0();
                for (unsigned s = 1; s <= f.mult; ++s) {
                    quotient = exact_div(quotient, f.root);
                    image_span.push_back(coeff_vector(quotient, rows));
                }
            }
            const Functional dq = delta_q(q);
            const Matrix b = bphi_matrix(cfg, dq, kN);
            const auto ker = nullspace(b);
            const Poly qq = expand(q);
            const auto want = multiples_basis(qq, kN - q.degree() + 1, kN + 1);
            const std::string tag = "q = " + qq.str() + ", g0 = " + label(p);
            check(ker.size() == want.size() && same_span(ker, want), "Ker B_delta(q) != q C[z] for " + tag);
            for (std::size_t j = 0; j < b.cols(); ++j)
                check(in_span(image_span, b.column(j)), "image outside span{P/(z-root)^s} for " + tag);
            const auto k = kernel_classify(cfg, dq, kN);
            check(k.kind == KernelKind::PrincipalIdeal && k.q == q, "classifier disagrees for " + tag);
        }
    }
}

void duhamel_ring(Checker& check) {
    JetSource src(20261019);
    const unsigned n = 10;
    for (const auto& p : duhamel_generators())
        for (const auto& lambda : {GaussianRational(0), half()}) {
            const DuhamelConfig cfg(p, lambda);
            const unsigned m = cfg.m();
            for (int t = 0; t < 3; ++t) {
                const Jet f = src.next(lambda, n + 2 * m), g = src.next(lambda, n + 2 * m), h = src.next(lambda, n + 2 * m);
                const std::string tag = "P = " + label(p) + ", lambda = " + lambda.str();
                const Jet fg = duhamel_product(cfg, f, g);
                check(cut(fg, n) == cut(duhamel_product(cfg, g, f), n), "not commutative: " + tag);
                check(cut(duhamel_product(cfg, fg, h), n) == cut(duhamel_product(cfg, f, duhamel_product(cfg, g, h)), n),
                      "not associative: " + tag);
                check(fg == duhamel_product_by_parts(cfg, f, g), "product forms differ: " + tag);
            }
        }
    const DuhamelConfig classical{FactoredPoly()};
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            const Jet za = jet_of_poly(Poly::monomial(a), 0, kN), zb = jet_of_poly(Poly::monomial(b), 0, kN);
            const GaussianRational c = factorial(a) * factorial(b) / factorial(a + b);
            check(duhamel_product(classical, za, zb) == jet_of_poly(Poly::monomial(a + b, c), 0, kN),
                  "z^" + std::to_string(a) + " * z^" + std::to_string(b) + " off the monomial law");
        }
}

void duality(Checker& check) {
    const auto pool = functional_pool();
    std::size_t pair = 0;
    for (const auto& p : standard_generators()) {
        const DuhamelConfig cfg(p);
        for (int k = 0; k < 4; ++k, ++pair) {
            const auto r = duality_bridge(cfg, pool[(2 * pair + 1) % pool.size()], pool[(3 * pair + 2) % pool.size()], 8);
            check(r.agree, "transform not multiplicative: " + r.phi.dump() + " with " + r.inputs.dump());
        }
    }
    const DuhamelConfig cfg(standard_generators().front());
    const Functional d01 = Functional::delta(0, 1);
    const auto r = duality_bridge(cfg, d01, d01, 8);
    const Jet want = jet_of_poly(Poly{0, -1, half()}, 0, 8);
    check(r.agree && r.observed.at("transform_of_product") == io::to_json(want), "witness delta(0,1)^2 is not z^2/2 - z");
}

void inversion(Checker& check) {
    const DuhamelConfig cfg{FactoredPoly()};
    const Jet f = jet_of_poly(Poly{1, 1}, 0, 6);
    const Jet g = jet_of_poly(Poly{0, 1}, 0, 6);
    const Jet h = duhamel_invert(cfg, f, g, 6);
    const std::vector<GaussianRational> want{
        0, 1, GaussianRational(-1, 2), GaussianRational(1, 6), GaussianRational(-1, 24), GaussianRational(1, 120),
        GaussianRational(-1, 720)};
    check(h.coeffs() == want, "h-jet of 1+z against z is " + io::to_json(h).dump());
    check(cut(duhamel_product(cfg, f, h), 6) == g, "back-substitution residual is not zero");
}

void factorization(Checker& check) {
    const FactoredPoly two({{1, 1}, {2, 1}});
    const FactoredPoly one({{1, 1}});
    const auto a = factorize(G0Config(two), Functional::delta(1, 0), kN);
    check(a.verified, "delta(1,0) with g0 = (1-z)(1-z/2) not verified");
    const auto b = factorize(G0Config(one), Functional::delta(0, 1) + Functional::delta(0, 0), kN);
    check(b.verified, "delta(0,1)+delta(0,0) with g0 = 1-z not verified");
}

const std::map<std::string, std::function<void(Checker&)>>& suites() {
    static const std::map<std::string, std::function<void(Checker&)>> s = {
        {"kernel-laws", kernel_laws},
        {"right-inverse", right_inverse},
        {"commutant", commutant},
        {"algebra-morphism", algebra_morphism},
        {"eigen-relation", eigen_relation},
        {"unit-laws", unit_laws},
        {"canonical-kernels", canonical_kernels},
        {"duhamel-ring", duhamel_ring},
        {"duality-bridge", duality},
        {"inversion", inversion},
        {"factorization", factorization},
    };
    return s;
}

}  // namespace

std::vector<FactoredPoly> standard_generators() {
    return {FactoredPoly({{1, 1}}), FactoredPoly({{1, 2}}), FactoredPoly({{1, 1}, {2, 1}})};
}

std::vector<Functional> functional_pool() {
    const GaussianRational i = GaussianRational::i();
    using F = Functional;
    return {
        F::delta(0, 1),
        F::delta(1, 0),
        F::delta(2, 0) + F::delta(0, 0),
        F::delta(half(), 1),
        F::delta(i, 0),
        F::delta(0, 3) - F::delta(1, 1, 2),
        F::delta(2, 2) + F::delta(half(), 0, 3),
        F::delta(i, 1) + F::delta(0, 0),
        F::delta(1, 3, half()),
        F::delta(0, 2) + F::delta(i, 0, GaussianRational(1, 1) + i),
        F::delta(half(), 0) - F::delta(2, 1),
    };
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"kernel-laws",     "right-inverse",     "commutant",
                                                "algebra-morphism", "eigen-relation",    "unit-laws",
                                                "canonical-kernels", "duhamel-ring",     "duality-bridge",
                                                "inversion",        "factorization"};
    return names;
}

SuiteResult run_suite(const std::string& name) {
    const auto it = suites().find(name);
    if (it == suites().end()) throw InvalidArgument("unknown suite '" + name + "'");
    SuiteResult r{name, 0, {}};
    Checker check(r);
    try {
        it->second(check);
    } catch (const MathError& e) {
        r.failures.push_back(std::string("raised ") + e.what());
    }
    return r;
}

}  // namespace shiftalg
