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

#include "shiftalg/audit_report.hpp"

namespace shiftalg {

io::json AuditReport::to_json() const {
    io::json j;
    j["claim_id"] = claim_id;
    j["cfg"] = cfg;
    j["phi"] = phi;
    if (!inputs.empty()) j["inputs"] = inputs;
    j["observed"] = observed;
    j["paper_prediction"] = paper_prediction;
    j["agree"] = agree;
    return j;
}

}  // namespace shiftalg
