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
#include "cmzv/app/commands.hpp"
#include "cmzv/app/config.hpp"
#include "cmzv/app/index_expr.hpp"
#include "cmzv/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace cmzv;
using namespace cmzv::app;
using namespace cmzv::testing;

namespace fs = std::filesystem;

namespace {

struct Sandbox {
    fs::path dir;
    std::map<std::string, std::string> vars;

    Sandbox()
    {
        dir = fs::temp_directory_path() / ("cmzv-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
                                           ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir);
        fs::create_directories(dir);
        vars["HOME"] = dir.string();
    }
    ~Sandbox() { fs::remove_all(dir); }

    EnvLookup env() const
    {
        return [this](const std::string& key) -> std::optional<std::string> {
            auto it = vars.find(key);
            if (it == vars.end()) return std::nullopt;
            return it->second;
        };
    }

    std::string write(const std::string& name, const std::string& text) const
    {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const Sandbox& box, const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err, box.env());
    return {code, out.str(), err.str()};
}

} // namespace

TEST(IndexExpr, ParsesExamples)
{
    EXPECT_EQ(parse_index("({2};{0})@1"), idx({2}, {0}, 1));
    EXPECT_EQ(parse_index(" ( {1, 2} ; {1, 3} ) @ 6"), idx({1, 2}, {1, 3}, 6));
    // Exponents reduce mod N.
    EXPECT_EQ(parse_index("({1};{5})@2"), idx({1}, {1}, 2));
    EXPECT_EQ(parse_index("({};{})@3").depth(), 0u);
}

TEST(IndexExpr, RoundTrip)
{
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Index a = random_index(rng, 1 + i % 6, 4, 4);
        EXPECT_EQ(parse_index(render_index(a)), a);
    }
}

TEST(IndexExpr, ErrorPositions)
{
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {"({1},{1})@2", 4}, {"({1};{1})@0", 10}, {"({1,2};{1})@2", 1}, {"({0};{0})@1", 2},
        {"({2};{0})@1x", 11}, {"{2};{0})@1", 0},   {"({a};{0})@1", 2},
    };
    for (const auto& [text, pos] : cases) {
        try {
            parse_index(text);
            ADD_FAILURE() << text << " parsed";
        } catch (const ParseError& e) {
            EXPECT_EQ(e.position(), pos) << text << ": " << e.what();
            const std::string d = describe_parse_error(e, text);
            EXPECT_NE(d.find(std::string(pos, ' ') + "^"), std::string::npos) << d;
        }
    }
}

TEST(Cli, EvalReport)
{
    Sandbox box;
    const Outcome r = run(box, {"eval", "({2};{0})@1"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "eval");
    EXPECT_EQ(j["results"][0]["re"].get<std::string>().substr(0, 20), "1.644934066848226436");
    EXPECT_EQ(j["summary"]["failed"], 0);
}

TEST(Cli, ExitCodes)
{
    Sandbox box;
    EXPECT_EQ(run(box, {"eval", "({1},{1});@1"}).code, exit_usage);
    EXPECT_EQ(run(box, {"eval", "({1};{0})@1"}).code, exit_usage);
    EXPECT_EQ(run(box, {"frobnicate"}).code, exit_usage);
    EXPECT_EQ(run(box, {"csmzv", "({1};{1})@2", "--alpha", "1", "--bogus"}).code, exit_usage);
    EXPECT_EQ(run(box, {"--no-cache", "eval", "({2};{0})@1", "--prec", "400", "--max-terms", "100"}).code, exit_precision);
    EXPECT_EQ(run(box, {"verify", "antipode", "--N", "2", "--max-weight", "3"}).code, exit_ok);
}

TEST(Cli, CaretOnMalformedInput)
{
    Sandbox box;
    const Outcome r = run(box, {"eval", "({1},{1});@1"});
    EXPECT_NE(r.err.find("^"), std::string::npos);
    EXPECT_NE(r.err.find("({1},{1});@1"), std::string::npos);
}

TEST(Cli, RelationsFile)
{
    Sandbox box;
    const std::string ok = box.write("ok.txt", "# Euler\n({2};{0})@1\npi^2\n");
    const Outcome a = run(box, {"relations", "--file", ok, "--bound", "100"});
    ASSERT_EQ(a.code, exit_ok) << a.err;
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["results"][0]["status"], "ok");

    const std::string none = box.write("none.txt", "({2};{0})@1\npi\n");
    const Outcome b = run(box, {"relations", "--file", none, "--bound", "100"});
    EXPECT_EQ(b.code, exit_verification_failed);
    EXPECT_NE(b.err.find("FAIL"), std::string::npos);

    const std::string product = box.write("prod.txt", "({1,1};{0,1})@2\n({1};{1})@2*({1};{1})@2\n");
    EXPECT_EQ(run(box, {"relations", "--file", product, "--bound", "10"}).code, exit_ok);
}

TEST(Cli, SpanExample)
{
    Sandbox box;
    const Outcome r = run(box, {"span", "--N", "2", "--alpha", "1", "--weight", "2", "--prec", "60"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GT(j["summary"]["cases"].get<int>(), 0);
}

TEST(Cli, Deterministic)
{
    Sandbox box;
    const std::vector<std::string> args{"--no-cache", "csmzv", "({1,2};{1,0})@3", "--alpha", "1", "--eval"};
    const Outcome a = run(box, args);
    const Outcome b = run(box, args);
    ASSERT_EQ(a.code, exit_ok) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CacheCoherence)
{
    Sandbox box;
    const std::string path = (box.dir / "sub" / "values.jsonl").string();
    const Outcome cold = run(box, {"--cache", path, "eval", "({1,2};{1,1})@3", "--prec", "50"});
    ASSERT_EQ(cold.code, exit_ok) << cold.err;
    ASSERT_TRUE(fs::exists(path));
    const Outcome warm = run(box, {"--cache", path, "eval", "({1,2};{1,1})@3", "--prec", "50"});
    EXPECT_EQ(cold.out, warm.out);
    const Outcome fresh = run(box, {"--no-cache", "eval", "({1,2};{1,1})@3", "--prec", "50"});
    EXPECT_EQ(nlohmann::json::parse(fresh.out)["results"], nlohmann::json::parse(cold.out)["results"]);

    const auto stats = nlohmann::json::parse(run(box, {"--cache", path, "cache", "stats"}).out);
    EXPECT_EQ(stats["results"][0]["records"], 1);
    EXPECT_EQ(run(box, {"--cache", path, "cache", "clear"}).code, exit_ok);
    const auto after = nlohmann::json::parse(run(box, {"--cache", path, "cache", "stats"}).out);
    EXPECT_EQ(after["results"][0]["records"], 0);
}

TEST(Cache, SkipsMalformedLinesAndLastWins)
{
    Sandbox box;
    const std::string path = box.write("c.jsonl", "not json\n");
    ValueCache cache(path);
    CacheRecord r{"({2};{0})@1", 40, "1.6", "0", "1e-40"};
    cache.store(r);
    r.re = "1.64";
    cache.store(r);
    ValueCache again(path);
    ASSERT_TRUE(again.lookup("({2};{0})@1", 40).has_value());
    EXPECT_EQ(again.lookup("({2};{0})@1", 40)->re, "1.64");
    EXPECT_FALSE(again.lookup("({2};{0})@1", 41).has_value());
    const CacheStats s = again.stats();
    EXPECT_EQ(s.records, 1u);
    EXPECT_EQ(s.malformed_lines, 1u);
}

TEST(Config, Precedence)
{
    Sandbox box;
    const std::string file = box.write("cfg.json", R"({"precision": 50, "max_terms": 5000, "coeff_bound": 77})");
    box.vars["CMZV_CONFIG"] = file;
    AppConfig c = resolve_config({}, box.env());
    EXPECT_EQ(c.eval.precision, 50);
    EXPECT_EQ(c.eval.max_terms, 5000);
    EXPECT_EQ(c.coeff_bound, 77);

    box.vars["CMZV_PRECISION"] = "55";
    c = resolve_config({}, box.env());
    EXPECT_EQ(c.eval.precision, 55);
    EXPECT_EQ(c.coeff_bound, 77);

    ConfigOverrides flags;
    flags.precision = 70;
    flags.no_cache = true;
    c = resolve_config(flags, box.env());
    EXPECT_EQ(c.eval.precision, 70);
    EXPECT_FALSE(c.cache_enabled);
}

TEST(Config, Defaults)
{
    Sandbox box;
    const AppConfig c = resolve_config({}, box.env());
    EXPECT_EQ(c.eval.precision, 40);
    EXPECT_EQ(c.cache_path, (box.dir / ".cache/cmzv/values.jsonl").string());
    EXPECT_TRUE(c.cache_enabled);
    EXPECT_EQ(resolve_config({}, box.env(), 60).eval.precision, 60);
}

TEST(Config, Rejected)
{
    Sandbox box;
    box.vars["CMZV_PRECISION"] = "lots";
    EXPECT_THROW(resolve_config({}, box.env()), ConfigError);
    box.vars.erase("CMZV_PRECISION");
    box.vars["CMZV_CONFIG"] = box.write("bad.json", "{ precision");
    EXPECT_THROW(resolve_config({}, box.env()), ConfigError);
    box.vars["CMZV_CONFIG"] = box.write("neg.json", R"({"precision": -4})");
    EXPECT_THROW(resolve_config({}, box.env()), std::invalid_argument);
}
