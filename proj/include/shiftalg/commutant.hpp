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

#ifndef SHIFTALG_COMMUTANT_HPP
#define SHIFTALG_COMMUTANT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftalg/audit_report.hpp"
#include "shiftalg/factored_poly.hpp"
#include "shiftalg/functional.hpp"
#include "shiftalg/linalg.hpp"
#include "shiftalg/operators.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

/// B_phi(f)(z) = phi_t(T_{z,g0}(f)(t)).
Poly bphi_apply(const G0Config& cfg, const Functional& phi, const Poly& f);

/// A_phi(f)(z) = phi_t(t * Ttilde_{z,g0}(f)(t)); B_phi = phi(g0) I + A_phi.
Poly aphi_apply(const G0Config& cfg, const Functional& phi, const Poly& f);

/// Rows of bphi_matrix: B_phi maps C[z]_N into C[z]_{N + deg P}.
inline std::size_t bphi_rows(const G0Config& cfg, std::size_t N) { return N + cfg.degree() + 1; }

/// Column i holds the coefficients of B_phi(z^i), i = 0..N. Columns are
/// computed in parallel.
Matrix bphi_matrix(const G0Config& cfg, const Functional& phi, std::size_t N);

/// Matrix of B_phi restricted to the invariant subspace P C[z]_m = Ker D^{m+1}
/// in the basis P z^j, j = 0..m.
Matrix restricted_matrix(const G0Config& cfg, const Functional& phi, std::size_t m);

namespace serial {
Matrix bphi_matrix(const G0Config& cfg, const Functional& phi, std::size_t N);
}  // namespace serial

enum class KernelKind { Zero, PrincipalIdeal, FiniteDim, NotInLattice };

std::string to_string(KernelKind k);

/// Ker B_phi within C[z]_N, matched against the lattice of invariant
/// subspaces q E and q C[z]_n (q ranging over the normalized divisors of P).
struct KernelClassification {
    KernelKind kind = KernelKind::Zero;
    FactoredPoly q;   // PrincipalIdeal and FiniteDim
    unsigned n = 0;   // FiniteDim: kernel is q C[z]_n
    std::vector<Poly> basis;
    std::size_t order_used = 0;
    /// FiniteDim only: whether n >= deg P - deg q - 1 holds.
    bool lattice_bound_ok = true;
    /// gbs_apply maps the basis back into its span.
    bool d_invariant = true;
};

/// Requires N >= 2 deg P + 2 (OrderTooSmall). A kernel filling q C[z]_{N - deg q}
/// at order N and again at order N + 1 is reported as the principal ideal q E.
KernelClassification kernel_classify(const G0Config& cfg, const Functional& phi, std::size_t N);

/// phi(g0), kernel, determinants of every restriction to P C[z]_m (m <= N - deg P),
/// and whether "isomorphism iff phi(g0) != 0" matches what was observed.
AuditReport iso_check(const G0Config& cfg, const Functional& phi, std::size_t N);

/// B_phi(g0) against phi(g0) g0.
AuditReport eigen_check(const G0Config& cfg, const Functional& phi);

/// f in P C[z]_m with B_phi(f) = g, for g in P C[z]_m. Throws CriterionFailed
/// when phi(g0) = 0, RestrictedMatrixSingular when the restriction is singular
/// anyway, InvalidArgument when g is not a multiple of P.
Poly invert_on_invariant(const G0Config& cfg, const Functional& phi, const Poly& g);

enum class FactorBranch { Isomorphism, ShiftPower, CanonicalTimesShift };

std::string to_string(FactorBranch b);

/// B_phi = B_{delta(q)} D^n B_psi (q absent for ShiftPower, n = 0 and psi = phi
/// for Isomorphism).
struct FactorizationResult {
    FactorBranch branch = FactorBranch::Isomorphism;
    unsigned n = 0;
    std::optional<FactoredPoly> q;
    Functional psi;
    /// The recomposition equals B_phi exactly on C[z]_N and psi(g0) != 0
    /// (for Isomorphism: the kernel at order N is trivial).
    bool verified = false;
    std::vector<std::string> audit_notes;
};

io::json to_json(const KernelClassification& k);
io::json to_json(const FactorizationResult& f);

/// Constructive factorization, every identity checked by exact recomposition.
/// Throws ZeroFunctional.
FactorizationResult factorize(const G0Config& cfg, const Functional& phi, std::size_t N);

/// xi built from delta_{0,i}, i < deg P, with xi(B_{delta(q)}(z^i)) = phi(z^i) for i < deg q.
Functional canonical_quotient(const G0Config& cfg, const Functional& phi, const FactoredPoly& q);

/// One instance for audit_claims; unused fields are ignored by a claim.
struct AuditInstance {
    Functional phi;
    Functional psi;
    std::optional<FactoredPoly> q;
    std::size_t order = 12;
};

/// Claim ids: kernel-lemma, injectivity-lemma, isomorphism-criterion,
/// eigen-relation, delta-orthogonality, algebra-morphism, canonical-kernel,
/// surjectivity-corollary.
const std::vector<std::string>& operator_claim_ids();

/// One report per instance, in input order. Disagreement is data, never an
/// error; an unknown claim id throws InvalidArgument.
std::vector<AuditReport> audit_claims(const G0Config& cfg, const std::string& claim_id,
                                      const std::vector<AuditInstance>& instances);

}  // namespace shiftalg

#endif
