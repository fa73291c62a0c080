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

#ifndef SHIFTALG_SCENARIO_HPP
#define SHIFTALG_SCENARIO_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftalg/commutant.hpp"
#include "shiftalg/duhamel.hpp"
#include "shiftalg/io.hpp"
#include "shiftalg/operators.hpp"

namespace shiftalg {

/// Malformed scenario or task arguments (exit code 2), as opposed to a
/// MathError raised by a well-formed task, which is reported as data.
class ScenarioError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Everything a task needs besides its own arguments.
struct Context {
    G0Config cfg;
    DuhamelConfig dcfg;
    /// Truncation order N of the polynomial side (C[z]_N).
    std::size_t order = 12;
    /// Order of the jets on the holomorphic side.
    unsigned jet_order = 12;

    Context(FactoredPoly p, GaussianRational lambda, std::size_t order, unsigned jet_order);
};

struct Scenario {
    Context ctx;
    io::json tasks = io::json::array();
};

/// {"g0":{"factors":[{"root","mult"}]},"lambda":str,"jet_order":int,"order":int,"tasks":[...]}.
/// "order" defaults to jet_order, which defaults to 12. Throws ScenarioError.
Scenario parse_scenario(const io::json& j);
Scenario load_scenario(const std::filesystem::path& path);

/// Operation names accepted in the "op" field of a task.
const std::vector<std::string>& task_ops();

/// Runs one task {"op": ..., args...}. A MathError from the computation becomes
/// {"ok": false, "error": {...}}; malformed arguments throw ScenarioError.
/// An optional "expect" object is compared key by key against the result.
io::json execute_task(const Context& ctx, const io::json& task);

/// {"scenario": {...}, "results": [...]} in task order.
io::json run_scenario(const Scenario& s);

/// True when every result with an "expect" field matched.
bool expectations_met(const io::json& report);

// Argument forms shared with the command line.
Poly poly_arg(const io::json& v);
Functional functional_arg(const io::json& v);
FactoredPoly factors_arg(const io::json& v);
/// A polynomial (expression or coefficient array) expanded at `center`, or
/// "transform:<functional>" for the Taylor jet at 0 of its transform.
Jet jet_arg(const io::json& v, const GaussianRational& center, unsigned order);

io::json to_json(const Matrix& m);
io::json to_json(const BivarPoly& b);
io::json to_json(const ExpPoly& e);

}  // namespace shiftalg

#endif
