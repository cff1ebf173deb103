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

#include "cmzv/app/index_expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

namespace cmzv::app {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos;

    void skip_space()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c)
    {
        skip_space();
        return pos < text.size() && text[pos] == c;
    }

    void expect(char c)
    {
        skip_space();
        if (pos >= text.size()) throw ParseError(std::string("syntax error: expected '") + c + "' at end of input", pos);
        if (text[pos] != c)
            throw ParseError(std::string("syntax error: expected '") + c + "', found '" + text[pos] + "'", pos);
        ++pos;
    }

    long read_uint()
    {
        skip_space();
        const std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (value > (std::numeric_limits<int>::max() - 9) / 10) throw ParseError("integer too large", start);
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) {
            if (pos >= text.size()) throw ParseError("syntax error: expected an unsigned integer at end of input", pos);
            throw ParseError(std::string("syntax error: expected an unsigned integer, found '") + text[pos] + "'", pos);
        }
        return value;
    }

    std::vector<std::pair<long, std::size_t>> read_list()
    {
        std::vector<std::pair<long, std::size_t>> out;
        expect('{');
        if (peek('}')) {
            ++pos;
            return out;
        }
        for (;;) {
            skip_space();
            const std::size_t at = pos;
            out.emplace_back(read_uint(), at);
            if (peek(',')) {
                ++pos;
                continue;
            }
            expect('}');
            return out;
        }
    }
};

} // namespace

Index parse_index_at(const std::string& text, std::size_t& pos)
{
    Cursor c{text, pos};
    c.expect('(');
    const std::size_t k_at = c.pos;
    const auto ks = c.read_list();
    c.expect(';');
    const auto es = c.read_list();
    c.expect(')');
    c.expect('@');
    c.skip_space();
    const std::size_t n_at = c.pos;
    const long n = c.read_uint();
    if (n == 0) throw ParseError("modulus N must be positive", n_at);
    if (ks.size() != es.size())
        throw ParseError("length mismatch: " + std::to_string(ks.size()) + " weights vs " + std::to_string(es.size()) + " roots",
                         k_at);
    std::vector<int> k;
    std::vector<int> e;
    for (const auto& [v, at] : ks) {
        if (v == 0) throw ParseError("weight entries must be at least 1", at);
        k.push_back(static_cast<int>(v));
    }
    for (const auto& [v, at] : es) e.push_back(static_cast<int>(v % n));
    pos = c.pos;
    return Index(k, e, static_cast<int>(n));
}

Index parse_index(const std::string& text)
{
    std::size_t pos = 0;
    Index idx = parse_index_at(text, pos);
    Cursor c{text, pos};
    c.skip_space();
    if (c.pos != text.size()) throw ParseError("syntax error: trailing characters", c.pos);
    return idx;
}

std::string render_index(const Index& idx)
{
    return idx.to_string();
}

std::string describe_parse_error(const ParseError& e, const std::string& text)
{
    std::string out = "error: ";
    out += e.what();
    out += " (position " + std::to_string(e.position()) + ")\n  " + text + "\n  ";
    out += std::string(std::min(e.position(), text.size()), ' ');
    out += "^\n";
    return out;
}

} // namespace cmzv::app
