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

#ifndef CMZV_APP_CONFIG_HPP
#define CMZV_APP_CONFIG_HPP

#include "cmzv/numerics.hpp"
#include "cmzv/relations.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace cmzv::app {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct AppConfig {
    EvalConfig eval;
    long coeff_bound = 1000000;
    std::size_t max_basis = 14;
    std::string cache_path;
    bool cache_enabled = true;

    CongruenceOptions congruence() const;
};

/// Values given on the command line; unset fields fall through to the
/// environment, then the config file, then the defaults.
struct ConfigOverrides {
    std::optional<int> precision;
    std::optional<long> max_terms;
    std::optional<int> accel_order;
    std::optional<long> coeff_bound;
    std::optional<std::size_t> max_basis;
    std::optional<std::string> cache_path;
    bool no_cache = false;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup process_environment();

/// Environment: CMZV_PRECISION, CMZV_MAX_TERMS, CMZV_ACCEL_ORDER,
/// CMZV_COEFF_BOUND, CMZV_MAX_BASIS, CMZV_CACHE, CMZV_NO_CACHE, CMZV_CONFIG.
/// Config file (JSON, default $HOME/.config/cmzv/config.json): keys
/// precision, max_terms, accel_order, coeff_bound, max_basis, cache_path, cache.
AppConfig resolve_config(const ConfigOverrides& flags, const EnvLookup& env, int default_precision = 40);

} // namespace cmzv::app

#endif
