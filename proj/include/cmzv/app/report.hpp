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

#ifndef CMZV_APP_REPORT_HPP
#define CMZV_APP_REPORT_HPP

#include "cmzv/app/config.hpp"
#include "cmzv/bigcomplex.hpp"
#include "cmzv/cyclotomic.hpp"
#include "cmzv/symbolic.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cmzv::app {

using Json = nlohmann::ordered_json;

struct CaseResult {
    std::string name;
    bool ok = true;
    std::string residual = "0";
    Json coefficients = Json::array();
    /// Extra fields, written after the fixed ones.
    Json details = Json::object();
};

/// {"command", "config", "results": [{"case", "status", "residual", "coefficients", ...}], "summary"}.
struct Report {
    std::string command;
    Json config = Json::object();
    std::vector<CaseResult> results;

    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
    Json to_json() const;
    /// Two-space indented, trailing newline.
    std::string dump() const;
};

/// Rational strings over 1, z, z^2, ... (z = zeta_N).
Json cyclo_json(const CycloNumber& c);
/// [{"term": ..., "coefficient": [...]}] in canonical term order.
Json symbolic_json(const SymbolicValue& v);
/// {"re", "im", "err"} as decimal strings limited by err.
Json value_json(const BigComplex& v, int digits);
std::string residual_string(const Real& r);
Json eval_config_json(const AppConfig& cfg);

} // namespace cmzv::app

#endif
