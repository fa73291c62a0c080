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

#ifndef SHIFTALG_EXPR_PARSER_HPP
#define SHIFTALG_EXPR_PARSER_HPP

#include <string_view>

#include "shiftalg/factored_poly.hpp"
#include "shiftalg/functional.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {

/// Recursive-descent parser for polynomial expressions in z:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := ('+' | '-')? base ('^' uint)?
///   base   := rational | 'z' | 'i' | '(' expr ')'
/// rational is digits ('/' digits)?. Throws SyntaxError carrying the offset.
Poly parse_function(std::string_view src);

/// Sum of terms (coeff '*')? 'delta(' point ',' order ')', where coeff is a
/// rational or a parenthesized Gaussian rational and point is any
/// GaussianRational text, e.g. "delta(1,0)+2*delta(0,3)-(1+1*i)*delta(1/2+1*i,1)".
Functional parse_functional(std::string_view src);

/// Factor list "root[:mult],root[:mult],..." for the normalized polynomial
/// prod (1 - z/root)^mult, e.g. "1:2,1/2". Empty text is the constant 1.
FactoredPoly parse_factors(std::string_view src);

}  // namespace shiftalg

#endif
