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

#include "shiftalg/exp_poly.hpp"

#include <algorithm>

#include "shiftalg/errors.hpp"

namespace shiftalg {

ExpPoly::ExpPoly(std::vector<ExpTerm> terms) {
    for (const auto& t : terms) add_term(t.frequency, t.poly);
}

void ExpPoly::add_term(const GaussianRational& frequency, const Poly& poly) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), frequency,
                               [](const ExpTerm& t, const GaussianRational& f) { return t.frequency < f; });
    if (it != terms_.end() && it->frequency == frequency) {
        it->poly += poly;
        if (it->poly.is_zero()) terms_.erase(it);
        return;
    }
    if (!poly.is_zero()) terms_.insert(it, ExpTerm{frequency, poly});
}

Jet jet_of_exppoly(const ExpPoly& e, unsigned order, const GaussianRational& center) {
    if (!center.is_zero()) throw NonzeroCenterForExpPoly();
    std::vector<GaussianRational> c(order + 1);
    for (const auto& term : e.terms()) {
        // exp(mu z) Taylor coefficients mu^r / r!
        std::vector<GaussianRational> ex(order + 1);
        GaussianRational p = 1;
        for (unsigned r = 0; r <= order; ++r) {
            ex[r] = p / factorial(r);
            p *= term.frequency;
        }
        for (unsigned n = 0; n <= order; ++n)
            for (unsigned k = 0; k <= n && k < term.poly.coeffs().size(); ++k)
                c[n] += term.poly.coeffs()[k] * ex[n - k];
    }
    return Jet(0, std::move(c));
}

}  // namespace shiftalg
