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

#include "shiftalg/scenario.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "shiftalg/errors.hpp"
#include "shiftalg/expr_parser.hpp"

namespace shiftalg {

using io::json;

Context::Context(FactoredPoly p, GaussianRational lambda, std::size_t order, unsigned jet_order)
    : cfg(p, lambda), dcfg(p, lambda), order(order), jet_order(jet_order) {}

namespace {

template <class F>
auto converting(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        throw ScenarioError(what + ": " + e.what());
    }
}

}  // namespace

Poly poly_arg(const json& v) {
    if (v.is_string()) return parse_function(v.get<std::string>());
    if (v.is_number_integer()) return Poly(v.get<long>());
    return io::poly_from_json(v);
}

Functional functional_arg(const json& v) {
    if (v.is_string()) return parse_functional(v.get<std::string>());
    return io::functional_from_json(v);
}

FactoredPoly factors_arg(const json& v) {
    if (v.is_string()) return parse_factors(v.get<std::string>());
    return io::factored_from_json(v);
}

Jet jet_arg(const json& v, const GaussianRational& center, unsigned order) {
    constexpr std::string_view kTransform = "transform:";
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.starts_with(kTransform)) {
            const Functional phi = parse_functional(std::string_view(s).substr(kTransform.size()));
            return jet_of_exppoly(fourier_laplace(phi), order, center);
        }
    }
    return jet_of_poly(poly_arg(v), center, order);
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const BivarPoly& b) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.t_size(); ++i) rows.push_back(io::to_json(b.t_coeff(i)));
    return rows;
}

json to_json(const ExpPoly& e) {
    json a = json::array();
    for (const auto& t : e.terms()) a.push_back({{"frequency", t.frequency.str()}, {"poly", io::to_json(t.poly)}});
    return a;
}

namespace {

class Args {
   public:
    Args(std::string op, const json& task) : op_(std::move(op)), t_(task) {}

    bool has(const char* key) const { return t_.contains(key); }

    const json& at(const char* key) const {
        if (!t_.contains(key)) throw ScenarioError(op_ + ": missing argument '" + key + "'");
        return t_.at(key);
    }

    Poly poly(const char* key) const {
        return converting(where(key), [&] { return poly_arg(at(key)); });
    }
    Functional functional(const char* key) const {
        return converting(where(key), [&] { return functional_arg(at(key)); });
    }
    FactoredPoly factors(const char* key) const {
        return converting(where(key), [&] { return factors_arg(at(key)); });
    }
    GaussianRational scalar(const char* key) const {
        return converting(where(key), [&] { return io::scalar_from_json(at(key)); });
    }
    Jet jet(const char* key, const GaussianRational& center, unsigned order) const {
        return converting(where(key), [&] { return jet_arg(at(key), center, order); });
    }
    unsigned uint(const char* key, unsigned fallback) const {
        if (!has(key)) return fallback;
        return converting(where(key), [&] {
            const long v = at(key).get<long>();
            if (v < 0 || v > 4096) throw std::out_of_range("expected an integer in [0, 4096]");
            return static_cast<unsigned>(v);
        });
    }
    std::string string(const char* key) const {
        return converting(where(key), [&] { return at(key).get<std::string>(); });
    }

   private:
    std::string where(const char* key) const { return op_ + ": argument '" + key + "'"; }

    std::string op_;
    const json& t_;
};

using Handler = std::function<json(const Context&, const Args&)>;

unsigned lifted(const Context& c) { return c.jet_order + c.dcfg.m(); }

std::size_t order_of(const Context& c, const Args& a) {
    return a.uint("order", static_cast<unsigned>(c.order));
}

std::vector<AuditInstance> operator_instances(const Context& c, const json& list) {
    std::vector<AuditInstance> out;
    for (const auto& inst : list) {
        Args a("audit instance", inst);
        AuditInstance ai;
        if (a.has("phi")) ai.phi = a.functional("phi");
        if (a.has("psi")) ai.psi = a.functional("psi");
        if (a.has("q")) ai.q = a.factors("q");
        ai.order = order_of(c, a);
        out.push_back(std::move(ai));
    }
    return out;
}

json audit(const Context& c, const Args& a) {
    const std::string claim = a.string("claim");
    json list = json::array();
    if (a.has("instances")) {
        list = a.at("instances");
        if (!list.is_array()) throw ScenarioError("audit: 'instances' must be an array");
    } else {
        json inst = json::object();
        for (const char* key : {"phi", "psi", "q", "f", "witness", "order"})
            if (a.has(key)) inst[key] = a.at(key);
        list.push_back(inst);
    }
    json reports = json::array();
    if (claim == "duhamel-criterion") {
        for (const auto& inst : list) {
            Args ia("audit instance", inst);
            const unsigned n = ia.uint("order", c.jet_order);
            const Jet f = ia.jet("f", c.dcfg.lambda(), n + c.dcfg.m());
            std::optional<Jet> w;
            if (ia.has("witness")) w = ia.jet("witness", c.dcfg.lambda(), n);
            reports.push_back(wigley_check(c.dcfg, f, n, w).to_json());
        }
        return reports;
    }
    if (claim == "duality-bridge") {
        for (const auto& inst : list) {
            Args ia("audit instance", inst);
            const Functional phi = ia.functional("phi");
            const Functional psi = ia.functional("psi");
            reports.push_back(duality_bridge(c.dcfg, phi, psi, ia.uint("order", c.jet_order)).to_json());
        }
        return reports;
    }
    const auto& ids = operator_claim_ids();
    if (std::find(ids.begin(), ids.end(), claim) == ids.end()) throw ScenarioError("audit: unknown claim '" + claim + "'");
    for (const auto& r : audit_claims(c.cfg, claim, operator_instances(c, list))) reports.push_back(r.to_json());
    return reports;
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h = {
        {"gbs",
         [](const Context& c, const Args& a) { return io::to_json(gbs_power(c.cfg, a.poly("f"), a.uint("n", 1))); }},
        {"backward_shift", [](const Context&, const Args& a) { return io::to_json(backward_shift(a.poly("f"))); }},
        {"m", [](const Context&, const Args& a) { return io::to_json(m_apply(a.poly("f"))); }},
        {"dz",
         [](const Context&, const Args& a) {
             const Poly f = a.poly("f");
             if (a.has("z0")) return io::to_json(dz_at(f, a.scalar("z0")));
             return to_json(dz_bivar(f));
         }},
        {"shift", [](const Context& c, const Args& a) { return to_json(shift_apply(c.cfg, a.poly("f"))); }},
        {"tilde_shift", [](const Context& c, const Args& a) { return to_json(tilde_shift_apply(c.cfg, a.poly("f"))); }},
        {"gbs_matrix",
         [](const Context& c, const Args& a) {
             return to_json(gbs_power_matrix(c.cfg, a.uint("n", 1), order_of(c, a)));
         }},
        {"apply",
         [](const Context&, const Args& a) {
             const Functional phi = a.functional("phi");
             return io::to_json(phi.apply(a.poly("f")));
         }},
        {"bphi",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return io::to_json(bphi_apply(c.cfg, phi, a.poly("f")));
         }},
        {"aphi",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return io::to_json(aphi_apply(c.cfg, phi, a.poly("f")));
         }},
        {"bphi_matrix",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return to_json(bphi_matrix(c.cfg, phi, order_of(c, a)));
         }},
        {"restricted_matrix",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return to_json(restricted_matrix(c.cfg, phi, a.uint("m", 0)));
         }},
        {"otimes",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             const Functional psi = a.functional("psi");
             return io::to_json(otimes(c.cfg, phi, psi));
         }},
        {"moments",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             const Functional psi = a.functional("psi");
             json m = json::array();
             for (const auto& x : convolution_moments(c.cfg, phi, psi, a.uint("count", 8))) m.push_back(x.str());
             return m;
         }},
        {"transform",
         [](const Context& c, const Args& a) {
             const ExpPoly e = fourier_laplace(a.functional("phi"));
             return json{{"exppoly", to_json(e)}, {"jet", io::to_json(jet_of_exppoly(e, c.jet_order))}};
         }},
        {"delta_q", [](const Context&, const Args& a) { return io::to_json(delta_q(a.factors("q"))); }},
        {"classify",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return to_json(kernel_classify(c.cfg, phi, order_of(c, a)));
         }},
        {"iso_check",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return iso_check(c.cfg, phi, order_of(c, a)).to_json();
         }},
        {"eigen_check", [](const Context& c, const Args& a) { return eigen_check(c.cfg, a.functional("phi")).to_json(); }},
        {"invert",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return io::to_json(invert_on_invariant(c.cfg, phi, a.poly("g")));
         }},
        {"factorize",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return to_json(factorize(c.cfg, phi, order_of(c, a)));
         }},
        {"canonical_quotient",
         [](const Context& c, const Args& a) {
             const Functional phi = a.functional("phi");
             return io::to_json(canonical_quotient(c.cfg, phi, a.factors("q")));
         }},
        {"audit", audit},
        {"pj_polys",
         [](const Context& c, const Args&) {
             const PjPolys pj = pj_polys(c.dcfg.P());
             json p = json::array(), pt = json::array();
             for (const auto& x : pj.p) p.push_back(io::to_json(x));
             for (const auto& x : pj.p_tilde) pt.push_back(io::to_json(x));
             return json{{"p", p}, {"p_tilde", pt}};
         }},
        {"pd",
         [](const Context& c, const Args& a) {
             return io::to_json(pd_apply(c.dcfg.P(), a.jet("f", c.dcfg.lambda(), lifted(c))));
         }},
        {"duhamel",
         [](const Context& c, const Args& a) {
             const Jet f = a.jet("f", c.dcfg.lambda(), lifted(c));
             const Jet h = a.jet("h", c.dcfg.lambda(), c.jet_order);
             const std::string form = a.has("form") ? a.string("form") : "direct";
             if (form == "by_parts") return io::to_json(duhamel_product_by_parts(c.dcfg, f, h));
             if (form != "direct") throw ScenarioError("duhamel: form must be 'direct' or 'by_parts'");
             return io::to_json(duhamel_product(c.dcfg, f, h));
         }},
        {"criterion",
         [](const Context& c, const Args& a) {
             return io::to_json(duhamel_criterion(c.dcfg, a.jet("f", c.dcfg.lambda(), lifted(c))));
         }},
        {"duhamel_matrix",
         [](const Context& c, const Args& a) {
             return to_json(duhamel_matrix(c.dcfg, a.jet("f", c.dcfg.lambda(), lifted(c)), c.jet_order));
         }},
        {"duhamel_invert",
         [](const Context& c, const Args& a) {
             const Jet f = a.jet("f", c.dcfg.lambda(), lifted(c));
             const Jet g = a.jet("g", c.dcfg.lambda(), c.jet_order);
             return io::to_json(duhamel_invert(c.dcfg, f, g, c.jet_order));
         }},
    };
    return h;
}

json error_json(const MathError& e) {
    std::string type = "MathError";
    if (dynamic_cast<const SingularJetMatrix*>(&e)) type = "SingularJetMatrix";
    else if (dynamic_cast<const CriterionFailed*>(&e)) type = "CriterionFailed";
    else if (dynamic_cast<const RestrictedMatrixSingular*>(&e)) type = "RestrictedMatrixSingular";
    else if (dynamic_cast<const ReconstructionInconsistent*>(&e)) type = "ReconstructionInconsistent";
    else if (dynamic_cast<const OrderTooSmall*>(&e)) type = "OrderTooSmall";
    else if (dynamic_cast<const NoSolution*>(&e)) type = "NoSolution";
    else if (dynamic_cast<const ZeroFunctional*>(&e)) type = "ZeroFunctional";
    else if (dynamic_cast<const ConstantPolynomial*>(&e)) type = "ConstantPolynomial";
    else if (dynamic_cast<const NonzeroRemainder*>(&e)) type = "NonzeroRemainder";
    else if (dynamic_cast<const CenterMismatch*>(&e)) type = "CenterMismatch";
    else if (dynamic_cast<const NonzeroCenterForExpPoly*>(&e)) type = "NonzeroCenterForExpPoly";
    else if (dynamic_cast<const InvalidArgument*>(&e)) type = "InvalidArgument";
    return {{"type", type}, {"message", e.what()}};
}

}  // namespace

const std::vector<std::string>& task_ops() {
    static const std::vector<std::string> ops = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : handlers()) v.push_back(k);
        return v;
    }();
    return ops;
}

json execute_task(const Context& ctx, const json& task) {
    if (!task.is_object()) throw ScenarioError("task must be a JSON object");
    if (!task.contains("op") || !task.at("op").is_string()) throw ScenarioError("task without a string 'op'");
    const std::string op = task.at("op").get<std::string>();
    const auto it = handlers().find(op);
    if (it == handlers().end()) throw ScenarioError("unknown op '" + op + "'");

    json out = json::object();
    if (task.contains("id")) out["id"] = task.at("id");
    out["op"] = op;
    try {
        out["result"] = it->second(ctx, Args(op, task));
        out["ok"] = true;
    } catch (const MathError& e) {
        out["ok"] = false;
        out["error"] = error_json(e);
    }
    if (task.contains("expect")) {
        const json& want = task.at("expect");
        if (!want.is_object()) throw ScenarioError(op + ": 'expect' must be an object");
        bool met = true;
        for (const auto& [key, value] : want.items()) {
            const json* got = nullptr;
            if (key == "ok" || key == "error")
                got = out.contains(key) ? &out.at(key) : nullptr;
            else if (out.contains("result") && out.at("result").is_object() && out.at("result").contains(key))
                got = &out.at("result").at(key);
            else if (key == "result" && out.contains("result"))
                got = &out.at("result");
            if (got == nullptr || *got != value) met = false;
        }
        out["expect_ok"] = met;
    }
    return out;
}

Scenario parse_scenario(const json& j) {
    return converting("scenario", [&] {
        if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
        FactoredPoly p;
        if (j.contains("g0")) p = factors_arg(j.at("g0"));
        GaussianRational lambda = j.contains("lambda") ? io::scalar_from_json(j.at("lambda")) : GaussianRational();
        const long jet_order = j.value("jet_order", 12L);
        const long order = j.value("order", jet_order);
        if (jet_order < 0 || jet_order > 4096 || order < 0 || order > 4096)
            throw ScenarioError("order out of range [0, 4096]");
        Scenario s{Context(std::move(p), std::move(lambda), static_cast<std::size_t>(order),
                           static_cast<unsigned>(jet_order)),
                   json::array()};
        if (j.contains("tasks")) {
            s.tasks = j.at("tasks");
            if (!s.tasks.is_array()) throw ScenarioError("'tasks' must be an array");
            for (const auto& t : s.tasks) {
                if (!t.is_object() || !t.contains("op") || !t.at("op").is_string())
                    throw ScenarioError("every task needs a string 'op'");
                const auto& ops = task_ops();
                const auto op = t.at("op").get<std::string>();
                if (std::find(ops.begin(), ops.end(), op) == ops.end())
                    throw ScenarioError("unknown op '" + op + "'");
            }
        }
        return s;
    });
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ScenarioError(path.string() + ": " + e.what());
    }
    return parse_scenario(j);
}

json run_scenario(const Scenario& s) {
    json results = json::array();
    for (const auto& t : s.tasks) results.push_back(execute_task(s.ctx, t));
    json header = {{"g0", io::to_json(s.ctx.cfg.P())},
                   {"lambda", s.ctx.dcfg.lambda().str()},
                   {"order", s.ctx.order},
                   {"jet_order", s.ctx.jet_order}};
    return {{"scenario", header}, {"results", results}};
}

bool expectations_met(const json& report) {
    for (const auto& r : report.at("results"))
        if (r.contains("expect_ok") && !r.at("expect_ok").get<bool>()) return false;
    return true;
}

}  // namespace shiftalg
