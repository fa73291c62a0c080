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

#ifndef SHIFTALG_AUDIT_REPORT_HPP
#define SHIFTALG_AUDIT_REPORT_HPP

#include <string>

#include "shiftalg/io.hpp"

namespace shiftalg {

/// One claim evaluated on one concrete instance. Observed values are exact
/// canonical strings; `agree` is the literal comparison of what was observed
/// against the stated prediction.
struct AuditReport {
    std::string claim_id;
    io::json cfg = io::json::object();
    io::json phi = io::json::array();
    io::json inputs = io::json::object();  // psi, f, order, ... when relevant
    io::json observed = io::json::object();
    std::string paper_prediction;
    bool agree = false;

    /// {claim_id, cfg, phi, inputs, observed, paper_prediction, agree}
    io::json to_json() const;
};

}  // namespace shiftalg

#endif
