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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shiftalg/commutant.hpp"
#include "shiftalg/errors.hpp"

namespace shiftalg {
namespace {

using GR = GaussianRational;
using F = Functional;

const G0Config kLinear(FactoredPoly({{1, 1}}));
const G0Config kDouble(FactoredPoly({{1, 2}}));
const G0Config kTwoRoots(FactoredPoly({{1, 1}, {2, 1}}));

std::vector<G0Config> configs() { return {kLinear, kDouble, kTwoRoots}; }

std::vector<F> pool() {
    const GR i = GR::i();
    return {F::delta(0, 0), F::delta(0, 1), F::delta(1, 0), F::delta(2, 0) + F::delta(0, 1, 3),
            F::delta(GR(1, 2), 2), F::delta(i, 1) - F::delta(1, 0, GR(1, 2)), F::delta(0, 0) + F::delta(1, 0)};
}

TEST(CommutantTest, BphiExamples) {
    for (const Poly& f : {Poly(1), Poly{0, 1}, Poly{0, 0, 1}}) EXPECT_EQ(bphi_apply(kLinear, F::delta(1, 0), f), Poly(f(1)));
    EXPECT_EQ(bphi_apply(kLinear, F::delta(0, 1), Poly(1)), Poly());
    EXPECT_EQ(bphi_apply(kLinear, F::delta(0, 1), Poly{0, 1}), (Poly{1, -1}));
    std::mt19937 rng(3);
    for (const auto& cfg : configs()) {
        const Poly f = oracle::random_poly(rng, 6);
        EXPECT_EQ(bphi_apply(cfg, F::delta(0, 0), f), f);
    }
}

TEST(CommutantTest, BphiAgainstOracle) {
    std::mt19937 rng(30);
    for (const auto& cfg : configs())
        for (const auto& phi : pool()) {
            const Poly f = oracle::random_poly(rng, 7);
            EXPECT_EQ(bphi_apply(cfg, phi, f), oracle::bphi(cfg.g0(), phi, f)) << phi.str();
        }
}

TEST(CommutantTest, AphiDecomposition) {
    EXPECT_EQ(aphi_apply(kLinear, F::delta(0, 1), Poly(1)), Poly(1));
    std::mt19937 rng(31);
    for (const auto& cfg : configs())
        for (const auto& phi : pool()) {
            const Poly f = oracle::random_poly(rng, 6);
            EXPECT_EQ(bphi_apply(cfg, phi, f), f * phi.apply(cfg.g0()) + aphi_apply(cfg, phi, f));
        }
    EXPECT_EQ(aphi_apply(kTwoRoots, F::delta(0, 0), Poly{1, 2, 3}), Poly());
    EXPECT_EQ(aphi_apply(kTwoRoots, F::delta(1, 1), Poly()), Poly());
}

TEST(CommutantTest, CommutesWithShift) {
    for (const auto& cfg : configs())
        for (const auto& phi : pool())
            for (std::size_t i = 0; i <= 8; ++i) {
                const Poly zi = Poly::monomial(i);
                EXPECT_EQ(bphi_apply(cfg, phi, oracle::gbs(cfg.g0(), zi)), oracle::gbs(cfg.g0(), bphi_apply(cfg, phi, zi)));
            }
}

TEST(CommutantTest, MatrixExamples) {
    const Matrix id = bphi_matrix(kTwoRoots, F::delta(0, 0), 4);
    for (std::size_t i = 0; i < id.rows(); ++i)
        for (std::size_t j = 0; j < id.cols(); ++j) EXPECT_EQ(id(i, j), GR(i == j ? 1 : 0));
    const Matrix ev = bphi_matrix(kLinear, F::delta(1, 0), 2);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(ev.column(j), (Vector{1, 0, 0, 0}));
    EXPECT_TRUE(bphi_matrix(kLinear, F(), 5).is_zero());
    EXPECT_EQ(ev.rows(), bphi_rows(kLinear, 2));
}

TEST(CommutantTest, ParallelMatrixMatchesSerial) {
    for (const auto& cfg : configs())
        for (const auto& phi : pool()) EXPECT_EQ(bphi_matrix(cfg, phi, 12), serial::bphi_matrix(cfg, phi, 12));
}

TEST(CommutantTest, RestrictedMatrix) {
    // B_delta(0,0) restricted to P C[z]_m is the identity.
    const Matrix r = restricted_matrix(kTwoRoots, F::delta(0, 0), 3);
    EXPECT_EQ(r, Matrix::identity(4));
    // Restriction of a scalar operator is that scalar.
    const Matrix s = restricted_matrix(kLinear, F::delta(0, 0, 2), 2);
    EXPECT_EQ(determinant(s), GR(8));
}

TEST(CommutantTest, ClassifyExamples) {
    const auto a = kernel_classify(kLinear, F::delta(1, 0), 12);
    EXPECT_EQ(a.kind, KernelKind::PrincipalIdeal);
    EXPECT_EQ(a.q, FactoredPoly({{1, 1}}));
    EXPECT_EQ(a.basis.size(), 12u);
    const auto b = kernel_classify(kLinear, F::delta(0, 1), 12);
    EXPECT_EQ(b.kind, KernelKind::FiniteDim);
    EXPECT_TRUE(b.q.is_constant());
    EXPECT_EQ(b.n, 0u);
    ASSERT_EQ(b.basis.size(), 1u);
    EXPECT_EQ(b.basis[0].degree(), 0);
    EXPECT_EQ(kernel_classify(kTwoRoots, F::delta(0, 0), 12).kind, KernelKind::Zero);
    EXPECT_THROW(kernel_classify(kTwoRoots, F::delta(0, 0), 5), OrderTooSmall);
}

TEST(CommutantTest, ClassifyCanonicalFunctionals) {
    for (const auto& cfg : configs())
        for (const auto& q : cfg.P().divisors()) {
            if (q.is_constant()) continue;
            const auto k = kernel_classify(cfg, delta_q(q), 12);
            EXPECT_EQ(k.kind, KernelKind::PrincipalIdeal);
            EXPECT_EQ(k.q, q);
            EXPECT_TRUE(k.d_invariant);
        }
}

TEST(CommutantTest, IsoCheckExamples) {
    const auto id = iso_check(kLinear, F::delta(0, 0), 12);
    EXPECT_TRUE(id.agree);
    EXPECT_EQ(id.observed.at("phi_g0"), "1");
    const auto ev = iso_check(kLinear, F::delta(1, 0), 12);
    EXPECT_TRUE(ev.agree);
    EXPECT_EQ(ev.observed.at("phi_g0"), "0");
    EXPECT_EQ(ev.observed.at("kernel").at("kind"), "PrincipalIdeal");
    const auto d = iso_check(kLinear, F::delta(0, 1), 12);
    EXPECT_FALSE(d.agree);
    EXPECT_EQ(d.observed.at("phi_g0"), "-1");
    EXPECT_EQ(d.claim_id, "isomorphism-criterion");
}

TEST(CommutantTest, EigenRelation) {
    const auto r = eigen_check(kLinear, F::delta(0, 1));
    EXPECT_TRUE(r.agree);
    EXPECT_EQ(r.observed.at("B_phi_g0"), (io::json{"-1", "1"}));
    EXPECT_TRUE(eigen_check(kLinear, F::delta(1, 0)).agree);
    for (const auto& cfg : configs())
        for (const auto& phi : pool()) EXPECT_TRUE(eigen_check(cfg, phi).agree);
}

TEST(CommutantTest, InvertOnInvariant) {
    const Poly g = kTwoRoots.g0() * Poly{2, -1, 3};
    EXPECT_EQ(invert_on_invariant(kTwoRoots, F::delta(0, 0), g), g);
    EXPECT_EQ(invert_on_invariant(kLinear, F::delta(0, 0, 2), kLinear.g0() * Poly{4, 2}), (kLinear.g0() * Poly{2, 1}));
    const F phi = F::delta(0, 0) + F::delta(1, 0);
    const Poly g2 = kLinear.g0() * Poly{1, 5};
    EXPECT_EQ(bphi_apply(kLinear, phi, invert_on_invariant(kLinear, phi, g2)), g2);
    EXPECT_THROW(invert_on_invariant(kLinear, F::delta(1, 0), g2), CriterionFailed);
    EXPECT_THROW(invert_on_invariant(kLinear, F::delta(0, 0), Poly{1, 1}), InvalidArgument);
    EXPECT_EQ(invert_on_invariant(kLinear, F::delta(0, 1), kLinear.g0()), -kLinear.g0());
}

TEST(CommutantTest, FactorizeFixtures) {
    const auto a = factorize(kTwoRoots, F::delta(1, 0), 12);
    EXPECT_EQ(a.branch, FactorBranch::CanonicalTimesShift);
    EXPECT_EQ(a.n, 0u);
    ASSERT_TRUE(a.q.has_value());
    EXPECT_EQ(*a.q, FactoredPoly({{1, 1}}));
    EXPECT_TRUE(a.verified);
    const auto b = factorize(kLinear, F::delta(0, 1) + F::delta(0, 0), 12);
    EXPECT_EQ(b.branch, FactorBranch::ShiftPower);
    EXPECT_EQ(b.n, 1u);
    EXPECT_FALSE(b.psi.apply(kLinear.g0()).is_zero());
    EXPECT_TRUE(b.verified);
    const auto c = factorize(kDouble, F::delta(0, 0, 3), 12);
    EXPECT_EQ(c.branch, FactorBranch::Isomorphism);
    EXPECT_TRUE(c.verified);
    EXPECT_THROW(factorize(kLinear, F(), 12), ZeroFunctional);
}

TEST(CommutantTest, FactorizationRecomposesExactly) {
    for (const auto& cfg : configs())
        for (const auto& phi : pool()) {
            const auto r = factorize(cfg, phi, 12);
            if (r.branch == FactorBranch::Isomorphism) continue;
            EXPECT_TRUE(r.verified) << phi.str();
            for (std::size_t i = 0; i <= 12; ++i) {
                Poly x = oracle::gbs(cfg.g0(), oracle::bphi(cfg.g0(), r.psi, Poly::monomial(i)), r.n);
                if (r.q) x = oracle::bphi(cfg.g0(), delta_q(*r.q), x);
                EXPECT_EQ(x, oracle::bphi(cfg.g0(), phi, Poly::monomial(i))) << phi.str() << " i=" << i;
            }
        }
}

TEST(CommutantTest, CanonicalQuotient) {
    const FactoredPoly q({{1, 1}});
    const F xi = canonical_quotient(kTwoRoots, F::delta(1, 0, 3), q);
    for (std::size_t i = 0; i <= 8; ++i)
        EXPECT_EQ(xi.apply(bphi_apply(kTwoRoots, delta_q(q), Poly::monomial(i))), GR(3)) << i;
}

TEST(CommutantTest, AuditExamples) {
    const auto k = audit_claims(kLinear, "kernel-lemma", {{F::delta(0, 1), {}, {}, 12}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_FALSE(k[0].agree);
    EXPECT_EQ(k[0].observed.at("B_phi_g0"), (io::json{"-1", "1"}));
    const auto d = audit_claims(kTwoRoots, "delta-orthogonality", {{F::delta(1, 0), F::delta(2, 0), {}, 12}});
    EXPECT_TRUE(d[0].agree);
    EXPECT_EQ(d[0].observed.at("product"), io::json::array());
    const auto same = audit_claims(kLinear, "delta-orthogonality", {{F::delta(1, 0), F::delta(1, 0), {}, 12}});
    EXPECT_FALSE(same[0].agree);
    EXPECT_EQ(same[0].observed.at("product_text"), "delta(1,0)");
    const auto m = audit_claims(kTwoRoots, "algebra-morphism", {{F::delta(0, 1), F::delta(2, 1), {}, 8}});
    EXPECT_TRUE(m[0].agree);
}

TEST(CommutantTest, AuditKeepsInputOrder) {
    std::vector<AuditInstance> inst;
    for (const auto& phi : pool()) inst.push_back({phi, {}, {}, 12});
    const auto r = audit_claims(kTwoRoots, "eigen-relation", inst);
    ASSERT_EQ(r.size(), inst.size());
    for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i].phi, io::to_json(inst[i].phi));
    EXPECT_THROW(audit_claims(kLinear, "no-such-claim", inst), InvalidArgument);
}

TEST(CommutantTest, CanonicalKernelAudit) {
    for (const auto& cfg : configs())
        for (const auto& q : cfg.P().divisors()) {
            if (q.is_constant()) continue;
            const auto r = audit_claims(cfg, "canonical-kernel", {{F(), {}, q, 12}});
            EXPECT_TRUE(r[0].agree) << r[0].to_json().dump();
        }
}

}  // namespace
}  // namespace shiftalg
