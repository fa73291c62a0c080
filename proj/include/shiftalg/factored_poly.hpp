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

#ifndef SHIFTALG_FACTORED_POLY_HPP
#define SHIFTALG_FACTORED_POLY_HPP

#include <vector>

#include "shiftalg/gaussian_rational.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

struct RootFactor {
    GaussianRational root;
    unsigned mult = 1;

    friend bool operator==(const RootFactor&, const RootFactor&) = default;
};

/// Polynomial given by its zeros, normalized to value 1 at the origin:
/// prod (1 - z/root)^mult. Roots are nonzero and pairwise distinct, and every
/// multiplicity is positive. The empty factor list is the constant 1.
class FactoredPoly {
   public:
    FactoredPoly() = default;
    /// Throws ZeroRoot for a zero root, InvalidArgument for a repeated root or
    /// zero multiplicity.
    explicit FactoredPoly(std::vector<RootFactor> factors);

    const std::vector<RootFactor>& factors() const noexcept { return factors_; }
    unsigned degree() const noexcept;
    bool is_constant() const noexcept { return factors_.empty(); }

    /// Multiplicity of `root` (0 when it is not a root).
    unsigned multiplicity(const GaussianRational& root) const;

    /// All normalized divisors, including 1 and the polynomial itself, in a
    /// fixed order (mixed-radix count over the factor multiplicities).
    std::vector<FactoredPoly> divisors() const;

    friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;

   private:
    std::vector<RootFactor> factors_;
};

/// prod (1 - z/root)^mult; the constant term is exactly 1.
Poly expand(const FactoredPoly& fp);

}  // namespace shiftalg

#endif
