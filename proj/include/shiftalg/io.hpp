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

#ifndef SHIFTALG_IO_HPP
#define SHIFTALG_IO_HPP

#include "json.hpp"
#include "shiftalg/factored_poly.hpp"
#include "shiftalg/functional.hpp"
#include "shiftalg/gaussian_rational.hpp"
#include "shiftalg/jet.hpp"
#include "shiftalg/operators.hpp"
#include "shiftalg/poly.hpp"

// JSON forms of the exact types. Scalars are canonical GaussianRational
// strings, polynomials are arrays of scalars lowest degree first.
namespace shiftalg::io {

using json = nlohmann::ordered_json;

json to_json(const GaussianRational& x);
json to_json(const Poly& p);
json to_json(const FactoredPoly& fp);
json to_json(const Functional& phi);
json to_json(const Jet& j);
json to_json(const G0Config& cfg);

/// Accepts a string or an integer.
GaussianRational scalar_from_json(const json& j);
Poly poly_from_json(const json& j);
/// Accepts [{root, mult}] or {"factors": [{root, mult}]}.
FactoredPoly factored_from_json(const json& j);
Functional functional_from_json(const json& j);

}  // namespace shiftalg::io

#endif
