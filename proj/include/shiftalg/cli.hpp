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

#ifndef SHIFTALG_CLI_HPP
#define SHIFTALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Output that would
/// go to stdout/stderr is written to `out`/`err`; --out redirects the report
/// to a file instead.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftalg::cli

#endif
