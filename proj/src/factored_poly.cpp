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

#include "shiftalg/factored_poly.hpp"

#include "shiftalg/errors.hpp"

namespace shiftalg {

FactoredPoly::FactoredPoly(std::vector<RootFactor> factors) : factors_(std::move(factors)) {
    for (std::size_t a = 0; a < factors_.size(); ++a) {
        if (factors_[a].root.is_zero()) throw ZeroRoot();
        if (factors_[a].mult == 0) throw InvalidArgument("root multiplicity must be positive");
        for (std::size_t b = 0; b < a; ++b)
            if (factors_[a].root == factors_[b].root) throw InvalidArgument("repeated root " + factors_[a].root.str());
    }
}

unsigned FactoredPoly::degree() const noexcept {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.mult;
    return d;
}

unsigned FactoredPoly::multiplicity(const GaussianRational& root) const {
    for (const auto& f : factors_)
        if (f.root == root) return f.mult;
    return 0;
}

std::vector<FactoredPoly> FactoredPoly::divisors() const {
    std::vector<FactoredPoly> out;
    std::vector<unsigned> choice(factors_.size(), 0);
    while (true) {
        std::vector<RootFactor> fs;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            if (choice[k] > 0) fs.push_back({factors_[k].root, choice[k]});
        out.emplace_back(std::move(fs));
        std::size_t k = 0;
        while (k < factors_.size() && choice[k] == factors_[k].mult) choice[k++] = 0;
        if (k == factors_.size()) break;
        ++choice[k];
    }
    return out;
}

Poly expand(const FactoredPoly& fp) {
    Poly r(1);
    for (const auto& f : fp.factors()) {
        if (f.root.is_zero()) throw ZeroRoot();
        Poly lin{GaussianRational(1), -(GaussianRational(1) / f.root)};
        r = r * lin.pow(f.mult);
    }
    return r;
}

}  // namespace shiftalg
