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

#include "cmzv/app/config.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>

namespace cmzv::app {

CongruenceOptions AppConfig::congruence() const
{
    CongruenceOptions opt;
    opt.eval = eval;
    opt.coeff_bound = coeff_bound;
    opt.max_basis = max_basis;
    return opt;
}

EnvLookup process_environment()
{
    return [](const std::string& name) -> std::optional<std::string> {
        const char* v = std::getenv(name.c_str());
        if (v == nullptr || *v == '\0') return std::nullopt;
        return std::string(v);
    };
}

namespace {

long parse_long(const std::string& text, const std::string& source)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(source + ": expected an integer, got '" + text + "'");
    }
    if (used != text.size()) throw ConfigError(source + ": expected an integer, got '" + text + "'");
    return v;
}

bool parse_bool(const std::string& text, const std::string& source)
{
    if (text == "1" || text == "true" || text == "yes") return true;
    if (text == "0" || text == "false" || text == "no") return false;
    throw ConfigError(source + ": expected a boolean, got '" + text + "'");
}

nlohmann::json load_file(const std::string& path, bool required)
{
    std::ifstream in(path);
    if (!in) {
        if (required) throw ConfigError("cannot read config file " + path);
        return nlohmann::json::object();
    }
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (!j.is_object()) throw ConfigError(path + ": top level must be an object");
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

template <typename T>
void take(const nlohmann::json& file, const char* key, T& field)
{
    if (!file.contains(key)) return;
    try {
        field = file.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("config file: bad value for '") + key + "'");
    }
}

} // namespace

AppConfig resolve_config(const ConfigOverrides& flags, const EnvLookup& env, int default_precision)
{
    AppConfig cfg;
    cfg.eval.precision = default_precision;
    if (auto home = env("HOME")) cfg.cache_path = *home + "/.cache/cmzv/values.jsonl";
    else cfg.cache_path = ".cmzv-cache.jsonl";

    std::string file_path;
    bool file_required = false;
    if (auto p = env("CMZV_CONFIG")) {
        file_path = *p;
        file_required = true;
    } else if (auto home = env("HOME")) {
        file_path = *home + "/.config/cmzv/config.json";
    }
    if (!file_path.empty()) {
        const nlohmann::json file = load_file(file_path, file_required);
        take(file, "precision", cfg.eval.precision);
        take(file, "max_terms", cfg.eval.max_terms);
        take(file, "accel_order", cfg.eval.accel_order);
        take(file, "coeff_bound", cfg.coeff_bound);
        take(file, "max_basis", cfg.max_basis);
        take(file, "cache_path", cfg.cache_path);
        take(file, "cache", cfg.cache_enabled);
    }

    if (auto v = env("CMZV_PRECISION")) cfg.eval.precision = static_cast<int>(parse_long(*v, "CMZV_PRECISION"));
    if (auto v = env("CMZV_MAX_TERMS")) cfg.eval.max_terms = parse_long(*v, "CMZV_MAX_TERMS");
    if (auto v = env("CMZV_ACCEL_ORDER")) cfg.eval.accel_order = static_cast<int>(parse_long(*v, "CMZV_ACCEL_ORDER"));
    if (auto v = env("CMZV_COEFF_BOUND")) cfg.coeff_bound = parse_long(*v, "CMZV_COEFF_BOUND");
    if (auto v = env("CMZV_MAX_BASIS")) cfg.max_basis = static_cast<std::size_t>(parse_long(*v, "CMZV_MAX_BASIS"));
    if (auto v = env("CMZV_CACHE")) cfg.cache_path = *v;
    if (auto v = env("CMZV_NO_CACHE")) cfg.cache_enabled = !parse_bool(*v, "CMZV_NO_CACHE");

    if (flags.precision) cfg.eval.precision = *flags.precision;
    if (flags.max_terms) cfg.eval.max_terms = *flags.max_terms;
    if (flags.accel_order) cfg.eval.accel_order = *flags.accel_order;
    if (flags.coeff_bound) cfg.coeff_bound = *flags.coeff_bound;
    if (flags.max_basis) cfg.max_basis = *flags.max_basis;
    if (flags.cache_path) cfg.cache_path = *flags.cache_path;
    if (flags.no_cache) cfg.cache_enabled = false;

    try {
        cfg.eval.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (cfg.coeff_bound < 1) throw ConfigError("coeff_bound must be at least 1");
    if (cfg.max_basis < 1) throw ConfigError("max_basis must be at least 1");
    return cfg;
}

} // namespace cmzv::app
