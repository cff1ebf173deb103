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

#ifndef CMZV_APP_CACHE_HPP
#define CMZV_APP_CACHE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace cmzv::app {

/// One evaluated value; numbers are kept as the decimal strings written.
struct CacheRecord {
    std::string index;
    int precision = 0;
    std::string re;
    std::string im;
    std::string err;

    bool operator==(const CacheRecord&) const = default;
};

struct CacheStats {
    std::size_t records = 0;
    std::size_t distinct_indices = 0;
    std::size_t malformed_lines = 0;
};

/// JSON-lines value store. Records are appended one line per write; on load
/// the last record for a given (index, precision) wins and unreadable lines
/// are skipped.
class ValueCache {
public:
    explicit ValueCache(std::string path);

    const std::string& path() const { return path_; }

    std::optional<CacheRecord> lookup(const std::string& index, int precision);
    void store(const CacheRecord& rec);
    void clear();
    CacheStats stats();

private:
    void load();

    std::string path_;
    bool loaded_ = false;
    std::size_t malformed_ = 0;
    std::map<std::pair<std::string, int>, CacheRecord> records_;
};

} // namespace cmzv::app

#endif
