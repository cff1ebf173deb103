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

#include "cmzv/app/report.hpp"

namespace cmzv::app {

std::size_t Report::failures() const
{
    std::size_t n = 0;
    for (const auto& r : results) n += r.ok ? 0 : 1;
    return n;
}

Json Report::to_json() const
{
    Json j;
    j["command"] = command;
    j["config"] = config;
    Json rows = Json::array();
    for (const auto& r : results) {
        Json row;
        row["case"] = r.name;
        row["status"] = r.ok ? "ok" : "fail";
        row["residual"] = r.residual;
        row["coefficients"] = r.coefficients;
        for (const auto& [key, value] : r.details.items()) row[key] = value;
        rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    j["summary"] = Json{{"cases", results.size()}, {"failed", failures()}};
    return j;
}

std::string Report::dump() const
{
    return to_json().dump(2) + "\n";
}

Json cyclo_json(const CycloNumber& c)
{
    Json out = Json::array();
    for (const auto& s : c.to_strings()) out.push_back(s);
    return out;
}

Json symbolic_json(const SymbolicValue& v)
{
    Json out = Json::array();
    for (const auto& [term, c] : v.terms()) out.push_back(Json{{"term", term.to_string()}, {"coefficient", cyclo_json(c)}});
    return out;
}

Json value_json(const BigComplex& v, int digits)
{
    return Json{{"re", render_value(v.re, v.err, digits)}, {"im", render_value(v.im, v.err, digits)}, {"err", render_error(v.err)}};
}

std::string residual_string(const Real& r)
{
    if (r == 0) return "0";
    return render_error(r);
}

Json eval_config_json(const AppConfig& cfg)
{
    return Json{{"precision", cfg.eval.precision},
                {"max_terms", cfg.eval.max_terms},
                {"accel_order", cfg.eval.accel_order},
                {"coeff_bound", cfg.coeff_bound},
                {"max_basis", cfg.max_basis}};
}

} // namespace cmzv::app
