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

#ifndef CMZV_APP_INDEX_EXPR_HPP
#define CMZV_APP_INDEX_EXPR_HPP

#include "cmzv/index.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmzv::app {

/// Malformed input text; position is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses "({k1,...};{e1,...})@N". Whitespace between tokens is ignored; the
/// exponents are reduced mod N.
Index parse_index(const std::string& text);

/// Parses an index expression starting at text[pos], advancing pos past it.
Index parse_index_at(const std::string& text, std::size_t& pos);

std::string render_index(const Index& idx);

/// Message plus the source line and a caret under the offending column.
std::string describe_parse_error(const ParseError& e, const std::string& text);

} // namespace cmzv::app

#endif
