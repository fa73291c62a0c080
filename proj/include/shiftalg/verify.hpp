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

#ifndef SHIFTALG_VERIFY_HPP
#define SHIFTALG_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "shiftalg/factored_poly.hpp"
#include "shiftalg/functional.hpp"

namespace shiftalg {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    bool passed() const noexcept { return failures.empty(); }
};

/// kernel-laws, right-inverse, commutant, algebra-morphism, eigen-relation,
/// unit-laws, canonical-kernels, duhamel-ring, duality-bridge, inversion,
/// factorization.
const std::vector<std::string>& suite_names();

/// Runs one suite; "all" is not accepted here. Throws InvalidArgument for an
/// unknown name.
SuiteResult run_suite(const std::string& name);

/// 1 - z, (1 - z)^2, (1 - z)(1 - z/2).
std::vector<FactoredPoly> standard_generators();

/// Functionals supported on {0, 1, 2, 1/2, i} with derivative orders <= 3.
std::vector<Functional> functional_pool();

}  // namespace shiftalg

#endif
