/*
   Copyright 2026 The cmzv Authors

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

#ifndef CMZV_APP_COMMANDS_HPP
#define CMZV_APP_COMMANDS_HPP

#include "cmzv/app/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cmzv::app {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    /// Precision unreachable within the term cutoff, or an enumeration cap hit.
    exit_precision = 3,
};

/// Runs one command line (args excludes the program name). The report goes
/// to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env);

} // namespace cmzv::app

#endif
