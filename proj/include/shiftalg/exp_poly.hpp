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

#ifndef SHIFTALG_EXP_POLY_HPP
#define SHIFTALG_EXP_POLY_HPP

#include <vector>

#include "shiftalg/gaussian_rational.hpp"
#include "shiftalg/jet.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

struct ExpTerm {
    GaussianRational frequency;
    Poly poly;

    friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// sum_j poly_j(z) * exp(frequency_j * z). Terms are sorted by frequency,
/// frequencies are distinct and no poly is zero.
class ExpPoly {
   public:
    ExpPoly() = default;
    explicit ExpPoly(std::vector<ExpTerm> terms);

    const std::vector<ExpTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds poly(z) * exp(frequency z), merging with an existing term.
    void add_term(const GaussianRational& frequency, const Poly& poly);

    friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

   private:
    std::vector<ExpTerm> terms_;
};

/// Taylor jet at 0. Coefficient n is sum_j sum_{k<=n} poly_j[k] mu_j^(n-k)/(n-k)!.
/// Throws NonzeroCenterForExpPoly for any other center.
Jet jet_of_exppoly(const ExpPoly& e, unsigned order, const GaussianRational& center = 0);

}  // namespace shiftalg

#endif
