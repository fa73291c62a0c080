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
#include "shiftalg/duhamel.hpp"
#include "shiftalg/errors.hpp"

namespace shiftalg {
namespace {

using GR = GaussianRational;
using F = Functional;

const DuhamelConfig kClassical{FactoredPoly()};
const DuhamelConfig kLinear{FactoredPoly({{1, 1}})};

std::vector<FactoredPoly> generators() {
    return {FactoredPoly(), FactoredPoly({{1, 1}}), FactoredPoly({{1, 2}}), FactoredPoly({{1, 1}, {2, 1}})};
}

Jet random_jet(std::mt19937& rng, const GR& center, unsigned order) {
    std::vector<GR> c(order + 1);
    for (auto& x : c) x = oracle::small_rational(rng);
    return Jet(center, c);
}

Jet cut(const Jet& j, unsigned order) { return j.order() > order ? j.truncated(order) : j; }

TEST(DuhamelTest, PjPolys) {
    const auto a = pj_polys(Poly{1, -1});
    ASSERT_EQ(a.p.size(), 1u);
    EXPECT_EQ(a.p[0], Poly(-1));
    EXPECT_EQ(a.p_tilde[0], (Poly{0, -1}));
    const auto b = pj_polys(Poly{1, -2, 1});
    ASSERT_EQ(b.p.size(), 2u);
    EXPECT_EQ(b.p[0], (Poly{-2, 1}));
    EXPECT_EQ(b.p[1], Poly(1));
    EXPECT_TRUE(pj_polys(Poly(1)).p.empty());
    EXPECT_TRUE(pj_polys(Poly(1)).p_tilde.empty());
}

TEST(DuhamelTest, PdApply) {
    EXPECT_EQ(pd_apply(Poly{1, -1}, Poly{0, 0, 1}), (Poly{0, -2, 1}));
    EXPECT_EQ(pd_apply(Poly(1), Poly{3, 1, 4}), (Poly{3, 1, 4}));
    EXPECT_EQ(pd_apply(Poly{1, -1}, Poly(1)), Poly(1));
    const Jet j = pd_apply(Poly{1, -1}, jet_of_poly(Poly{0, 0, 1}, 0, 5));
    EXPECT_EQ(j.order(), 4u);
    EXPECT_EQ(j, jet_of_poly(Poly{0, -2, 1}, 0, 4));
    EXPECT_THROW(pd_apply(Poly{1, -2, 1}, jet_of_poly(Poly(1), 0, 1)), OrderTooSmall);
}

TEST(DuhamelTest, UnitLaw) {
    std::mt19937 rng(1);
    for (const auto& p : generators())
        for (const GR& lambda : {GR(0), GR(1, 2), GR::i()}) {
            const DuhamelConfig cfg(p, lambda);
            const Jet h = random_jet(rng, lambda, 9);
            EXPECT_EQ(duhamel_product(cfg, jet_of_poly(Poly(1), lambda, 9 + cfg.m()), h), h);
        }
}

TEST(DuhamelTest, FrozenExamples) {
    EXPECT_EQ(duhamel_product(kLinear, jet_of_poly(Poly{0, 1}, 0, 9), jet_of_poly(Poly{0, 1}, 0, 8)),
              jet_of_poly(Poly{0, -1, GR(1, 2)}, 0, 8));
    const Jet e = jet_of_exppoly(ExpPoly({{1, Poly(1)}}), 8);
    EXPECT_TRUE(duhamel_product(kLinear, jet_of_poly(Poly{0, 1}, 0, 9), e).is_zero());
}

TEST(DuhamelTest, ClassicalMonomialLaw) {
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            const Jet r = duhamel_product(kClassical, jet_of_poly(Poly::monomial(a), 0, 12), jet_of_poly(Poly::monomial(b), 0, 12));
            EXPECT_EQ(r, jet_of_poly(oracle::classical_duhamel(Poly::monomial(a), Poly::monomial(b)), 0, 12));
        }
}

TEST(DuhamelTest, AgainstIntegralOracle) {
    std::mt19937 rng(44);
    for (const auto& p : generators()) {
        const DuhamelConfig cfg(p);
        for (int k = 0; k < 6; ++k) {
            const Poly f = oracle::random_poly(rng, 5), h = oracle::random_poly(rng, 5);
            const unsigned n = 12;
            const Jet got = duhamel_product(cfg, jet_of_poly(f, 0, n + cfg.m()), jet_of_poly(h, 0, n));
            EXPECT_EQ(got, jet_of_poly(oracle::duhamel_at_zero(cfg.P(), f, h), 0, n));
        }
    }
}

TEST(DuhamelTest, RingLawsAndFormsAgree) {
    std::mt19937 rng(45);
    for (const auto& p : generators())
        for (const GR& lambda : {GR(0), GR(1, 2)}) {
            const DuhamelConfig cfg(p, lambda);
            const unsigned n = 8, m = cfg.m();
            const Jet f = random_jet(rng, lambda, n + 2 * m), g = random_jet(rng, lambda, n + 2 * m),
                      h = random_jet(rng, lambda, n + 2 * m);
            const Jet fg = duhamel_product(cfg, f, g);
            EXPECT_EQ(fg.order(), n + m);
            EXPECT_EQ(fg, duhamel_product(cfg, g, f));
            EXPECT_EQ(fg, duhamel_product_by_parts(cfg, f, g));
            EXPECT_EQ(cut(duhamel_product(cfg, fg, h), n), cut(duhamel_product(cfg, f, duhamel_product(cfg, g, h)), n));
        }
}

TEST(DuhamelTest, CenterAndOrderChecks) {
    EXPECT_THROW(duhamel_product(kLinear, jet_of_poly(Poly(1), 1, 4), jet_of_poly(Poly(1), 1, 4)), CenterMismatch);
    EXPECT_THROW(duhamel_product(DuhamelConfig(FactoredPoly({{1, 2}})), Jet(0, 1u), Jet(0, 3u)), OrderTooSmall);
}

TEST(DuhamelTest, Criterion) {
    EXPECT_EQ(duhamel_criterion(kLinear, jet_of_poly(Poly{0, 1}, 0, 4)), GR(-1));
    EXPECT_EQ(duhamel_criterion(kClassical, jet_of_poly(Poly{1, 1}, 0, 4)), GR(1));
}

TEST(DuhamelTest, MatrixExamples) {
    EXPECT_EQ(duhamel_matrix(kClassical, jet_of_poly(Poly(1), 0, 6), 6), Matrix::identity(7));
    const Matrix z = duhamel_matrix(kLinear, jet_of_poly(Poly{0, 1}, 0, 4), 3);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(z(0, j), GR(0));
    const Matrix l = duhamel_matrix(kClassical, jet_of_poly(Poly{1, 1}, 0, 3), 3);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(l(i, i), GR(1));
        for (std::size_t j = i + 1; j < 4; ++j) EXPECT_EQ(l(i, j), GR(0));
    }
    EXPECT_THROW(duhamel_matrix(kLinear, jet_of_poly(Poly{0, 1}, 0, 3), 3), OrderTooSmall);
}

TEST(DuhamelTest, ParallelMatrixMatchesSerial) {
    std::mt19937 rng(46);
    for (const auto& p : generators()) {
        const DuhamelConfig cfg(p, GR(1, 2));
        const Jet f = random_jet(rng, GR(1, 2), 10 + cfg.m());
        EXPECT_EQ(duhamel_matrix(cfg, f, 10), serial::duhamel_matrix(cfg, f, 10));
    }
}

TEST(DuhamelTest, Inversion) {
    const Jet h = duhamel_invert(kClassical, jet_of_poly(Poly{1, 1}, 0, 6), jet_of_poly(Poly{0, 1}, 0, 6), 6);
    EXPECT_EQ(h.coeffs(), (std::vector<GR>{0, 1, GR(-1, 2), GR(1, 6), GR(-1, 24), GR(1, 120), GR(-1, 720)}));
    const Jet g = jet_of_poly(Poly{2, 0, 5}, 0, 6);
    EXPECT_EQ(duhamel_invert(kClassical, jet_of_poly(Poly(1), 0, 6), g, 6), g);
}

TEST(DuhamelTest, InversionSingular) {
    try {
        duhamel_invert(kLinear, jet_of_poly(Poly{0, 1}, 0, 7), jet_of_poly(Poly(1), 0, 6), 6);
        FAIL() << "expected SingularJetMatrix";
    } catch (const SingularJetMatrix& e) {
        EXPECT_EQ(e.criterion(), GR(-1));
    }
}

TEST(DuhamelTest, CriterionAudit) {
    const auto a = wigley_check(kClassical, jet_of_poly(Poly{1, 1}, 0, 8), 8);
    EXPECT_EQ(a.observed.at("criterion"), "1");
    EXPECT_TRUE(a.observed.at("invertible").get<bool>());
    EXPECT_TRUE(a.agree);
    const auto b = wigley_check(kClassical, jet_of_poly(Poly{0, 1}, 0, 8), 8);
    EXPECT_EQ(b.observed.at("criterion"), "0");
    EXPECT_FALSE(b.observed.at("invertible").get<bool>());
    EXPECT_TRUE(b.agree);
    const Jet e = jet_of_exppoly(ExpPoly({{1, Poly(1)}}), 8);
    const auto c = wigley_check(kLinear, jet_of_poly(Poly{0, 1}, 0, 9), 8, e);
    EXPECT_EQ(c.observed.at("criterion"), "-1");
    EXPECT_FALSE(c.observed.at("invertible").get<bool>());
    EXPECT_FALSE(c.agree);
    EXPECT_TRUE(c.observed.at("witness_product_zero").get<bool>());
    EXPECT_EQ(c.claim_id, "duhamel-criterion");
}

TEST(DuhamelTest, DualityBridge) {
    const auto w = duality_bridge(kLinear, F::delta(0, 1), F::delta(0, 1), 8);
    EXPECT_TRUE(w.agree);
    EXPECT_EQ(w.observed.at("transform_of_product"), io::to_json(jet_of_poly(Poly{0, -1, GR(1, 2)}, 0, 8)));
    const auto u = duality_bridge(kLinear, F::delta(0, 0), F::delta(0, 0), 8);
    EXPECT_EQ(u.observed.at("product_of_transforms"), io::to_json(jet_of_poly(Poly(1), 0, 8)));
    const F psi = F::delta(2, 1) + F::delta(GR::i(), 0, 3);
    const auto v = duality_bridge(DuhamelConfig(FactoredPoly({{1, 1}, {2, 1}})), F::delta(0, 0), psi, 8);
    EXPECT_TRUE(v.agree);
    EXPECT_EQ(v.observed.at("transform_of_product"), io::to_json(Jet(0, oracle::transform_jet(psi, 8))));
    EXPECT_THROW(duality_bridge(DuhamelConfig(FactoredPoly({{1, 1}}), 1), F::delta(0, 0), F::delta(0, 0), 4),
                 InvalidArgument);
}

}  // namespace
}  // namespace shiftalg
