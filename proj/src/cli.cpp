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

#include "shiftalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "shiftalg/errors.hpp"
#include "shiftalg/expr_parser.hpp"
#include "shiftalg/scenario.hpp"
#include "shiftalg/verify.hpp"

namespace shiftalg::cli {

namespace {

using io::json;

struct Common {
    std::string g0;
    std::string lambda = "0";
    unsigned order = 12;
    bool as_json = false;
    std::string out_path;
    std::string phi, psi, f, g, h, q, witness;
};

void add_common(CLI::App& app, Common& c) {
    app.add_option("--g0", c.g0, "factors of g0 as root[:mult],... (empty for 1)");
    app.add_option("--lambda", c.lambda, "expansion point of the jets");
    app.add_option("--order", c.order, "truncation order N (C[z]_N and jet order)")->check(CLI::Range(0, 4096));
    app.add_flag("--json", c.as_json, "emit JSON instead of text");
    app.add_option("--out", c.out_path, "write the report to this file");
}

Context make_context(const Common& c) {
    try {
        return Context(parse_factors(c.g0), GaussianRational::parse(c.lambda), c.order, c.order);
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("--g0/--lambda: ") + e.what());
    }
}

bool all_strings(const json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_string(); });
}

bool is_functional(const json& v) {
    return v.is_array() && !v.empty() &&
           std::all_of(v.begin(), v.end(), [](const json& a) { return a.is_object() && a.contains("point"); });
}

std::string render_text(const json& result) {
    if (result.is_string()) return result.get<std::string>();
    if (all_strings(result) && !result.empty()) return io::poly_from_json(result).str();
    if (is_functional(result)) return io::functional_from_json(result).str();
    if (result.is_object() && result.contains("coeffs") && result.contains("center")) {
        const std::string center = result.at("center").get<std::string>();
        const std::string order = std::to_string(result.at("order").get<unsigned>() + 1);
        std::string series = io::poly_from_json(result.at("coeffs")).str();
        if (center == "0") return series + " + O(z^" + order + ")";
        std::replace(series.begin(), series.end(), 'z', 'u');
        return series + " + O(u^" + order + "), u = z - (" + center + ")";
    }
    return result.dump(2);
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) throw ScenarioError("cannot write " + c.out_path);
    file << text;
}

// One task through the shared executor; math failures exit 1.
int single_task(const Common& c, const json& task, std::ostream& out, std::ostream& err) {
    const Context ctx = make_context(c);
    const json r = execute_task(ctx, task);
    if (!r.at("ok").get<bool>()) {
        if (c.as_json)
            emit(r.dump(2) + "\n", c, out);
        else
            err << "error: " << r.at("error").at("message").get<std::string>() << "\n";
        return kExitInvariant;
    }
    emit((c.as_json ? r.dump(2) : render_text(r.at("result"))) + "\n", c, out);
    return kExitOk;
}

void need(const std::string& value, const char* flag) {
    if (value.empty()) throw ScenarioError(std::string("missing ") + flag);
}

int do_verify(const Common& c, const std::string& suite, std::ostream& out) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end())
        names = {suite};
    else
        throw ScenarioError("unknown suite '" + suite + "'");
    bool ok = true;
    json arr = json::array();
    std::string text;
    for (const auto& n : names) {
        const SuiteResult r = run_suite(n);
        ok = ok && r.passed();
        arr.push_back({{"suite", r.name}, {"checks", r.checks}, {"passed", r.passed()}, {"failures", r.failures}});
        text += r.name + ": " + (r.passed() ? "PASS" : "FAIL") + " (" + std::to_string(r.checks) + " checks)\n";
        for (const auto& f : r.failures) text += "  " + f + "\n";
    }
    emit(c.as_json ? json{{"suites", arr}, {"passed", ok}}.dump(2) + "\n" : text, c, out);
    return ok ? kExitOk : kExitInvariant;
}

int do_audit(const Common& c, const std::vector<std::string>& claims, const std::string& scenario_path,
             std::ostream& out) {
    std::optional<Context> ctx;
    json instances = json::array();
    if (!scenario_path.empty()) {
        std::ifstream in(scenario_path);
        if (!in) throw ScenarioError("cannot open " + scenario_path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ScenarioError(scenario_path + ": " + e.what());
        }
        ctx.emplace(parse_scenario(j).ctx);
        if (j.contains("instances")) instances = j.at("instances");
    } else {
        ctx.emplace(make_context(c));
    }
    if (instances.empty()) {
        json inst = json::object();
        const std::pair<const char*, const std::string*> fields[] = {
            {"phi", &c.phi}, {"psi", &c.psi}, {"q", &c.q}, {"f", &c.f}, {"witness", &c.witness}};
        for (const auto& [key, value] : fields)
            if (!value->empty()) inst[key] = *value;
        instances.push_back(inst);
    }
    json reports = json::array();
    for (const auto& claim : claims) {
        const json r = execute_task(*ctx, {{"op", "audit"}, {"claim", claim}, {"instances", instances}});
        if (!r.at("ok").get<bool>())
            throw ScenarioError("audit " + claim + ": " + r.at("error").at("message").get<std::string>());
        for (const auto& rep : r.at("result")) reports.push_back(rep);
    }
    emit(reports.dump(2) + "\n", c, out);
    return kExitOk;
}

int do_run(const Common& c, const std::string& path, std::ostream& out) {
    const Scenario s = load_scenario(path);
    const json report = run_scenario(s);
    emit(report.dump(2) + "\n", c, out);
    return expectations_met(report) ? kExitOk : kExitInvariant;
}

const std::set<std::string> kEvalOps = {"gbs",  "backward_shift", "m",     "dz", "shift", "tilde_shift",
                                        "apply", "bphi",          "aphi",  "pd", "criterion", "delta_q",
                                        "moments", "pj_polys",    "bphi_matrix", "duhamel_matrix", "eigen_check",
                                        "iso_check"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculus for generalized backward shifts, their commutant and Duhamel products", "shiftalg"};
    app.require_subcommand(1);
    Common c;
    add_common(app, c);
    app.fallthrough();

    std::string op, z0;
    unsigned n = 1;
    auto* eval = app.add_subcommand("eval", "apply one operator");
    eval->add_option("--op", op, "operator name")->required()->check(CLI::IsMember(kEvalOps));
    eval->add_option("--f", c.f, "function, e.g. \"(1-z)^2\"");
    eval->add_option("--phi", c.phi, "functional, e.g. \"delta(1,0)+2*delta(0,3)\"");
    eval->add_option("--psi", c.psi, "second functional (moments)");
    eval->add_option("--q", c.q, "factor list (delta_q)");
    eval->add_option("--n", n, "power of D (gbs), moment count (moments)");
    eval->add_option("--z0", z0, "point of the divided difference");

    bool use_otimes = false, use_duhamel = false, by_parts = false;
    auto* product = app.add_subcommand("product", "phi (x) psi or the Duhamel product f * h");
    auto* o_flag = product->add_flag("--otimes", use_otimes, "functional convolution");
    auto* d_flag = product->add_flag("--duhamel", use_duhamel, "Duhamel product of jets");
    o_flag->excludes(d_flag);
    product->add_option("--phi", c.phi);
    product->add_option("--psi", c.psi);
    product->add_option("--f", c.f);
    product->add_option("--hjet", c.h, "right factor of the Duhamel product");
    product->add_flag("--by-parts", by_parts, "use the integrated-by-parts form");

    auto* invert = app.add_subcommand("invert", "solve B_phi(f) = g on P C[z], or f * h = g on jets");
    invert->add_option("--phi", c.phi);
    invert->add_option("--f", c.f);
    invert->add_option("--g", c.g)->required();

    auto* classify = app.add_subcommand("classify", "kernel of B_phi in the invariant-subspace lattice");
    classify->add_option("--phi", c.phi)->required();

    auto* factor = app.add_subcommand("factorize", "B_phi = B_delta(q) D^n B_psi");
    factor->add_option("--phi", c.phi)->required();

    auto* transform = app.add_subcommand("transform", "phi applied to exp(z t)");
    transform->add_option("--phi", c.phi)->required();

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("suite", suite, "suite name or 'all'");

    std::vector<std::string> claims;
    std::string audit_scenario;
    auto* audit = app.add_subcommand("audit", "evaluate claims on instances; disagreement is data");
    audit->add_option("claims", claims, "claim ids")->required();
    audit->add_option("--scenario", audit_scenario, "scenario file with g0, lambda and instances");
    audit->add_option("--phi", c.phi);
    audit->add_option("--psi", c.psi);
    audit->add_option("--q", c.q);
    audit->add_option("--f", c.f);
    audit->add_option("--witness", c.witness);

    std::string scenario_path;
    auto* runner = app.add_subcommand("run", "run a scenario file");
    runner->add_option("scenario", scenario_path)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) {
            json task = {{"op", op}};
            if (!c.f.empty()) task["f"] = c.f;
            if (!c.phi.empty()) task["phi"] = c.phi;
            if (!c.psi.empty()) task["psi"] = c.psi;
            if (!c.q.empty()) task["q"] = c.q;
            if (!z0.empty()) task["z0"] = z0;
            task[op == "moments" ? "count" : "n"] = n;
            return single_task(c, task, out, err);
        }
        if (product->parsed()) {
            if (use_otimes == use_duhamel) throw ScenarioError("product needs exactly one of --otimes, --duhamel");
            if (use_otimes) {
                need(c.phi, "--phi");
                need(c.psi, "--psi");
                return single_task(c, {{"op", "otimes"}, {"phi", c.phi}, {"psi", c.psi}}, out, err);
            }
            need(c.f, "--f");
            need(c.h, "--hjet");
            return single_task(
                c, {{"op", "duhamel"}, {"f", c.f}, {"h", c.h}, {"form", by_parts ? "by_parts" : "direct"}}, out, err);
        }
        if (invert->parsed()) {
            if (c.phi.empty() == c.f.empty()) throw ScenarioError("invert needs exactly one of --phi, --f");
            if (!c.phi.empty()) return single_task(c, {{"op", "invert"}, {"phi", c.phi}, {"g", c.g}}, out, err);
            return single_task(c, {{"op", "duhamel_invert"}, {"f", c.f}, {"g", c.g}}, out, err);
        }
        if (classify->parsed()) return single_task(c, {{"op", "classify"}, {"phi", c.phi}}, out, err);
        if (factor->parsed()) return single_task(c, {{"op", "factorize"}, {"phi", c.phi}}, out, err);
        if (transform->parsed()) return single_task(c, {{"op", "transform"}, {"phi", c.phi}}, out, err);
        if (verify->parsed()) return do_verify(c, suite, out);
        if (audit->parsed()) return do_audit(c, claims, audit_scenario, out);
        if (runner->parsed()) return do_run(c, scenario_path, out);
    } catch (const ScenarioError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}

}  // namespace shiftalg::cli
