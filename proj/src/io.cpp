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

#include "shiftalg/io.hpp"

#include "shiftalg/errors.hpp"

namespace shiftalg::io {

json to_json(const GaussianRational& x) { return x.str(); }

json to_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

json to_json(const FactoredPoly& fp) {
    json a = json::array();
    for (const auto& f : fp.factors()) a.push_back({{"root", f.root.str()}, {"mult", f.mult}});
    return a;
}

json to_json(const Functional& phi) {
    json a = json::array();
    for (const auto& at : phi.atoms())
        a.push_back({{"point", at.point.str()}, {"order", at.order}, {"coeff", at.coeff.str()}});
    return a;
}

json to_json(const Jet& j) {
    json c = json::array();
    for (const auto& x : j.coeffs()) c.push_back(x.str());
    return {{"center", j.center().str()}, {"order", j.order()}, {"coeffs", c}};
}

json to_json(const G0Config& cfg) { return {{"P", to_json(cfg.P())}, {"lambdaQ", cfg.lambda_q().str()}}; }

GaussianRational scalar_from_json(const json& j) {
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return GaussianRational(j.get<long>());
    throw InvalidArgument("expected a rational string or integer, got " + j.dump());
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgument("polynomial must be a JSON array");
    std::vector<GaussianRational> c;
    for (const auto& x : j) c.push_back(scalar_from_json(x));
    return Poly(std::move(c));
}

FactoredPoly factored_from_json(const json& j) {
    const json& list = j.is_object() ? j.at("factors") : j;
    if (!list.is_array()) throw InvalidArgument("factor list must be a JSON array");
    std::vector<RootFactor> fs;
    for (const auto& f : list) {
        long mult = f.contains("mult") ? f.at("mult").get<long>() : 1;
        if (mult <= 0) throw InvalidArgument("multiplicity must be positive");
        fs.push_back({scalar_from_json(f.at("root")), static_cast<unsigned>(mult)});
    }
    return FactoredPoly(std::move(fs));
}

Functional functional_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgument("functional must be a JSON array of atoms");
    std::vector<Atom> atoms;
    for (const auto& a : j) {
        long order = a.at("order").get<long>();
        if (order < 0) throw InvalidArgument("derivative order must be nonnegative");
        atoms.push_back({scalar_from_json(a.at("point")), static_cast<unsigned>(order),
                         a.contains("coeff") ? scalar_from_json(a.at("coeff")) : GaussianRational(1)});
    }
    return Functional(std::move(atoms));
}

}  // namespace shiftalg::io
