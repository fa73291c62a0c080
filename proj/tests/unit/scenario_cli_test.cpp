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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "shiftalg/cli.hpp"
#include "shiftalg/errors.hpp"
#include "shiftalg/scenario.hpp"

namespace shiftalg {
namespace {

using io::json;

const std::string kFixtures = SHIFTALG_FIXTURES_DIR;

struct Outcome {
    int code;
    std::string out, err;
};

Outcome cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Context linear_context() { return Context(FactoredPoly({{1, 1}}), 0, 12, 8); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

TEST(ScenarioTest, EmptyTaskList) {
    const Scenario s = load_scenario(kFixtures + "/empty.json");
    const json r = run_scenario(s);
    EXPECT_TRUE(r.at("results").empty());
    EXPECT_TRUE(expectations_met(r));
}

TEST(ScenarioTest, DefaultsAndHeader) {
    const Scenario s = parse_scenario(json::parse(R"({"g0":{"factors":[{"root":"1","mult":2}]},"lambda":"1/2"})"));
    EXPECT_EQ(s.ctx.jet_order, 12u);
    EXPECT_EQ(s.ctx.order, 12u);
    EXPECT_EQ(s.ctx.cfg.degree(), 2u);
    const json h = run_scenario(s).at("scenario");
    EXPECT_EQ(h.at("lambda"), "1/2");
}

TEST(ScenarioTest, RejectsMalformedScenarios) {
    EXPECT_THROW(parse_scenario(json::parse(R"({"tasks":[{"op":"frobnicate"}]})")), ScenarioError);
    EXPECT_THROW(parse_scenario(json::parse(R"({"tasks":[{"no_op":1}]})")), ScenarioError);
    EXPECT_THROW(parse_scenario(json::parse(R"({"lambda":"x"})")), ScenarioError);
    EXPECT_THROW(parse_scenario(json::parse(R"({"g0":{"factors":[{"root":"0","mult":1}]}})")), ScenarioError);
    EXPECT_THROW(parse_scenario(json::parse(R"({"jet_order":-1})")), ScenarioError);
    EXPECT_THROW(load_scenario("/nonexistent/scenario.json"), ScenarioError);
}

TEST(ScenarioTest, TaskResults) {
    const Context c = linear_context();
    EXPECT_EQ(execute_task(c, {{"op", "gbs"}, {"f", "z^2"}}).at("result"), (json{"0", "1"}));
    EXPECT_EQ(execute_task(c, {{"op", "bphi"}, {"phi", "delta(0,1)"}, {"f", "z"}}).at("result"), (json{"1", "-1"}));
    EXPECT_EQ(execute_task(c, {{"op", "apply"}, {"phi", "delta(0,1)"}, {"f", json{"1", "-1"}}}).at("result"), "-1");
    EXPECT_EQ(execute_task(c, {{"op", "otimes"}, {"phi", "delta(1,0)"}, {"psi", "delta(1,0)"}}).at("result"),
              io::to_json(Functional::delta(1, 0)));
    const json k = execute_task(c, {{"op", "classify"}, {"phi", "delta(1,0)"}}).at("result");
    EXPECT_EQ(k.at("kind"), "PrincipalIdeal");
    const json d = execute_task(c, {{"op", "duhamel"}, {"f", "z"}, {"h", "z"}}).at("result");
    EXPECT_EQ(d.at("coeffs"), (json{"0", "-1", "1/2", "0", "0", "0", "0", "0", "0"}));
}

TEST(ScenarioTest, MathErrorsAreData) {
    const Context c = linear_context();
    const json r = execute_task(c, {{"op", "duhamel_invert"}, {"f", "z"}, {"g", "1"}});
    EXPECT_FALSE(r.at("ok").get<bool>());
    EXPECT_EQ(r.at("error").at("type"), "SingularJetMatrix");
    const json q = execute_task(c, {{"op", "invert"}, {"phi", "delta(1,0)"}, {"g", "1-z"}});
    EXPECT_EQ(q.at("error").at("type"), "CriterionFailed");
}

TEST(ScenarioTest, ArgumentErrorsAreUsageErrors) {
    const Context c = linear_context();
    EXPECT_THROW(execute_task(c, {{"op", "gbs"}}), ScenarioError);
    EXPECT_THROW(execute_task(c, {{"op", "gbs"}, {"f", "z+"}}), ScenarioError);
    EXPECT_THROW(execute_task(c, {{"op", "apply"}, {"phi", "delta(1)"}, {"f", "z"}}), ScenarioError);
    EXPECT_THROW(execute_task(c, {{"op", "nope"}}), ScenarioError);
    EXPECT_THROW(execute_task(c, {{"op", "audit"}, {"claim", "nope"}, {"phi", "delta(0,0)"}}), ScenarioError);
}

TEST(ScenarioTest, Expectations) {
    const Context c = linear_context();
    EXPECT_TRUE(execute_task(c, {{"op", "gbs"}, {"f", "1"}, {"expect", {{"result", json{"1"}}}}}).at("expect_ok").get<bool>());
    EXPECT_FALSE(execute_task(c, {{"op", "gbs"}, {"f", "1"}, {"expect", {{"result", json{"2"}}}}}).at("expect_ok").get<bool>());
}

TEST(ScenarioTest, JetArguments) {
    const Jet e = jet_arg("transform:delta(1,0)", 0, 3);
    EXPECT_EQ(e.coeffs(), (std::vector<GaussianRational>{1, 1, GaussianRational(1, 2), GaussianRational(1, 6)}));
    EXPECT_EQ(jet_arg(json{"1", "1"}, 2, 2).coeffs(), (std::vector<GaussianRational>{3, 1, 0}));
}

TEST(ScenarioTest, FixturesMeetExpectations) {
    for (const char* name : {"factorization_canonical.json", "factorization_shift.json", "classical_duhamel.json",
                             "audit_linear.json", "audit_two_roots.json"}) {
        const json r = run_scenario(load_scenario(kFixtures + "/" + name));
        EXPECT_TRUE(expectations_met(r)) << name;
    }
}

TEST(CliTest, VerifyExitCodes) {
    EXPECT_EQ(cli_run({"verify", "kernel-laws"}).code, 0);
    EXPECT_EQ(cli_run({"verify", "inversion", "--json"}).code, 0);
    EXPECT_EQ(cli_run({"verify", "no-such-suite"}).code, 2);
}

TEST(CliTest, UsageErrors) {
    EXPECT_EQ(cli_run({}).code, 2);
    EXPECT_EQ(cli_run({"frobnicate"}).code, 2);
    EXPECT_EQ(cli_run({"eval", "--op", "gbs", "--f", "(1-z"}).code, 2);
    EXPECT_EQ(cli_run({"eval", "--op", "nope", "--f", "z"}).code, 2);
    EXPECT_EQ(cli_run({"product", "--otimes", "--duhamel", "--phi", "delta(0,0)", "--psi", "delta(0,0)"}).code, 2);
    EXPECT_EQ(cli_run({"classify", "--g0", "0", "--phi", "delta(0,0)"}).code, 2);
    EXPECT_EQ(cli_run({"run", "/nonexistent.json"}).code, 2);
    EXPECT_EQ(cli_run({"--help"}).code, 0);
}

TEST(CliTest, MathFailureExitsOne) {
    const auto r = cli_run({"invert", "--g0", "1", "--phi", "delta(1,0)", "--g", "1-z"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(CliTest, TextAndJsonOutput) {
    EXPECT_EQ(cli_run({"eval", "--op", "gbs", "--g0", "1", "--f", "z^2"}).out, "z\n");
    EXPECT_EQ(cli_run({"product", "--otimes", "--g0", "1", "--phi", "delta(0,1)", "--psi", "delta(0,1)"}).out,
              "-delta(0,1)+1/2*delta(0,2)\n");
    EXPECT_EQ(cli_run({"product", "--duhamel", "--g0", "1", "--order", "3", "--f", "z", "--hjet", "z"}).out,
              "-z + 1/2*z^2 + O(z^4)\n");
    const auto j = json::parse(cli_run({"transform", "--phi", "delta(0,1)", "--json"}).out);
    EXPECT_EQ(j.at("result").at("exppoly").at(0).at("poly"), (json{"0", "1"}));
}

TEST(CliTest, AuditDisagreementIsNotFailure) {
    const auto r = cli_run({"audit", "isomorphism-criterion", "kernel-lemma", "--g0", "1", "--phi", "delta(0,1)"});
    EXPECT_EQ(r.code, 0);
    const json reports = json::parse(r.out);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_FALSE(reports[0].at("agree").get<bool>());
    EXPECT_FALSE(reports[1].at("agree").get<bool>());
    EXPECT_EQ(cli_run({"audit", "no-such-claim", "--phi", "delta(0,0)"}).code, 2);
}

TEST(CliTest, AuditFromScenarioInstances) {
    const auto p = temp_file("shiftalg_audit_instances.json",
                             R"j({"g0":{"factors":[{"root":"1","mult":1},{"root":"2","mult":1}]},
                                 "instances":[{"phi":"delta(1,0)","psi":"delta(2,0)"}]})j");
    const auto r = cli_run({"audit", "delta-orthogonality", "--scenario", p.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out).at(0).at("agree").get<bool>());
}

TEST(CliTest, RunWritesStableReports) {
    const auto a = std::filesystem::temp_directory_path() / "shiftalg_report_a.json";
    const auto b = std::filesystem::temp_directory_path() / "shiftalg_report_b.json";
    const std::string fixture = kFixtures + "/audit_linear.json";
    EXPECT_EQ(cli_run({"run", fixture, "--out", a.string()}).code, 0);
    EXPECT_EQ(cli_run({"run", fixture, "--out", b.string()}).code, 0);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST(CliTest, FailedExpectationExitsOne) {
    const auto p = temp_file("shiftalg_bad_expect.json",
                             R"({"g0":{"factors":[{"root":"1","mult":1}]},
                                 "tasks":[{"op":"gbs","f":"1","expect":{"result":["2"]}}]})");
    EXPECT_EQ(cli_run({"run", p.string()}).code, 1);
}

}  // namespace
}  // namespace shiftalg
