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

#include "cmzv/app/cache.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

namespace cmzv::app {

ValueCache::ValueCache(std::string path) : path_(std::move(path)) {}

void ValueCache::load()
{
    if (loaded_) return;
    loaded_ = true;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            CacheRecord r{j.at("index").get<std::string>(), j.at("precision").get<int>(), j.at("re").get<std::string>(),
                          j.at("im").get<std::string>(), j.at("err").get<std::string>()};
            records_[{r.index, r.precision}] = r;
        } catch (const nlohmann::json::exception&) {
            ++malformed_;
        }
    }
}

std::optional<CacheRecord> ValueCache::lookup(const std::string& index, int precision)
{
    load();
    auto it = records_.find({index, precision});
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ValueCache::store(const CacheRecord& rec)
{
    load();
    const std::filesystem::path p(path_);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    nlohmann::ordered_json j;
    j["index"] = rec.index;
    j["precision"] = rec.precision;
    j["re"] = rec.re;
    j["im"] = rec.im;
    j["err"] = rec.err;
    const std::string line = j.dump() + "\n";
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot write cache file " + path_);
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.flush();
    records_[{rec.index, rec.precision}] = rec;
}

void ValueCache::clear()
{
    std::error_code ec;
    std::filesystem::remove(path_, ec);
    records_.clear();
    malformed_ = 0;
    loaded_ = true;
}

CacheStats ValueCache::stats()
{
    load();
    CacheStats s;
    s.records = records_.size();
    s.malformed_lines = malformed_;
    std::set<std::string> names;
    for (const auto& [key, rec] : records_) names.insert(key.first);
    s.distinct_indices = names.size();
    return s;
}

} // namespace cmzv::app
