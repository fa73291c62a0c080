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

#ifndef SHIFTALG_FUNCTIONAL_HPP
#define SHIFTALG_FUNCTIONAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "shiftalg/bivar_poly.hpp"
#include "shiftalg/exp_poly.hpp"
#include "shiftalg/factored_poly.hpp"
#include "shiftalg/gaussian_rational.hpp"
#include "shiftalg/operators.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

/// coeff * f^(order)(point)
struct Atom {
    GaussianRational point;
    unsigned order = 0;
    GaussianRational coeff = 1;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite linear combination of point-derivative functionals
/// f -> sum coeff * f^(order)(point). Atoms are kept sorted by (point, order),
/// with distinct (point, order) pairs and no zero coefficient, so equal
/// functionals have equal atom lists.
class Functional {
   public:
    Functional() = default;
    explicit Functional(std::vector<Atom> atoms);

    /// coeff * delta_{point, order}
    static Functional delta(const GaussianRational& point, unsigned order, const GaussianRational& coeff = 1);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    bool is_zero() const noexcept { return atoms_.empty(); }
    /// Highest derivative order among the atoms (0 for the zero functional).
    unsigned max_order() const noexcept;
    /// Distinct support points in sorted order.
    std::vector<GaussianRational> support() const;

    GaussianRational apply(const Poly& f) const;
    /// Applies the functional in the t variable; the result is a polynomial in z.
    Poly apply_t(const BivarPoly& f) const;
    /// Applies the functional in the z variable; the result is a polynomial in t.
    Poly apply_z(const BivarPoly& f) const { return apply_t(f.swapped()); }

    Functional& operator+=(const Functional& o);
    friend Functional operator+(Functional a, const Functional& b) { return a += b; }
    friend Functional operator-(Functional a, const Functional& b) { return a += b * GaussianRational(-1); }
    friend Functional operator*(const Functional& a, const GaussianRational& s);

    friend bool operator==(const Functional&, const Functional&) = default;

    /// Text form "delta(1,0)+2*delta(0,3)"; "0" for the zero functional.
    std::string str() const;

   private:
    void normalize();
    std::vector<Atom> atoms_;
};

/// Sum over the zeros of q of delta_{root,k}, 0 <= k < multiplicity.
/// Throws ConstantPolynomial for q = 1.
Functional delta_q(const FactoredPoly& q);

/// f -> phi(z^power * f).
Functional compose_with_power(const Functional& phi, unsigned power);

/// The moment phi(B_psi(z^i)) = (phi (x) psi)(z^i).
GaussianRational convolution_moment(const G0Config& cfg, const Functional& phi, const Functional& psi, std::size_t i);

/// Moments i = 0..count-1, evaluated in parallel.
std::vector<GaussianRational> convolution_moments(const G0Config& cfg, const Functional& phi, const Functional& psi,
                                                  std::size_t count);

/// phi (x) psi: f -> phi_z(psi_t(T_{z,g0}(f)(t))), reconstructed as a finite-support
/// functional from its monomial moments. The derivative-order bound starts at
/// max_order(phi) + max_order(psi) + 1 and is raised by one on inconsistency,
/// at most three times; then ReconstructionInconsistent is thrown. Every
/// reconstruction is checked against 5 moments beyond the determining ones.
Functional otimes(const G0Config& cfg, const Functional& phi, const Functional& psi);

/// Number of monomial moments that determine a reconstruction over `points`
/// support points with derivative orders <= bound.
inline std::size_t determining_degree(std::size_t points, unsigned bound) { return points * (bound + 1); }

/// phi(e_z): sum coeff * z^order * exp(point * z).
ExpPoly fourier_laplace(const Functional& phi);

namespace serial {
std::vector<GaussianRational> convolution_moments(const G0Config& cfg, const Functional& phi, const Functional& psi,
                                                  std::size_t count);
}  // namespace serial

}  // namespace shiftalg

#endif
