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

#include "cmzv/app/commands.hpp"

#include "cmzv/app/cache.hpp"
#include "cmzv/app/index_expr.hpp"
#include "cmzv/app/report.hpp"
#include "cmzv/app/suites.hpp"
#include "cmzv/errors.hpp"
#include "cmzv/regularization.hpp"
#include "cmzv/relations.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cmzv::app {

namespace {

constexpr int weight_cap = 6;

struct Options {
    ConfigOverrides overrides;
    int prec = 0;
    std::string config_path;

    std::string expr;
    long alpha = 0;
    bool star = false;
    bool evaluate = false;
    std::string suite;
    int modulus = 1;
    int max_weight = 3;
    int weight = 1;
    std::string file;
    long bound = 0;
    std::string cache_action;
};

struct Context {
    Options& opt;
    EnvLookup env;
    std::ostream& out;
    std::ostream& err;

    AppConfig config(int default_precision) const
    {
        ConfigOverrides o = opt.overrides;
        if (opt.prec > 0) o.precision = opt.prec;
        EnvLookup lookup = env;
        if (!opt.config_path.empty()) {
            const std::string path = opt.config_path;
            lookup = [base = env, path](const std::string& name) -> std::optional<std::string> {
                if (name == "CMZV_CONFIG") return path;
                return base(name);
            };
        }
        return resolve_config(o, lookup, default_precision);
    }
};

Index parse_expr(const std::string& text)
{
    return parse_index(text);
}

int finish(const Report& rep, Context& ctx)
{
    ctx.out << rep.dump();
    if (rep.ok()) return exit_ok;
    for (const auto& r : rep.results)
        if (!r.ok) ctx.err << "FAIL " << rep.command << ": " << r.name << " (residual " << r.residual << ")\n";
    return exit_verification_failed;
}

void check_weight(int w)
{
    if (w < 1) throw DomainError("weight must be at least 1");
    if (w > weight_cap) throw EnumerationCapExceeded("weight " + std::to_string(w) + " exceeds the cap " + std::to_string(weight_cap));
}

void check_modulus(int n)
{
    if (n < 1) throw DomainError("N must be at least 1");
}

int cmd_eval(Context& ctx)
{
    const Index idx = parse_expr(ctx.opt.expr);
    const AppConfig cfg = ctx.config(40);
    Report rep;
    rep.command = "eval";
    rep.config = eval_config_json(cfg);
    const std::string key = idx.to_string();
    std::optional<CacheRecord> rec;
    std::optional<ValueCache> cache;
    if (cfg.cache_enabled) {
        cache.emplace(cfg.cache_path);
        rec = cache->lookup(key, cfg.eval.precision);
    }
    if (!rec) {
        WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg.eval)));
        const BigComplex v = eval_cmzv(idx, cfg.eval);
        const Json j = value_json(v, cfg.eval.precision);
        rec = CacheRecord{key, cfg.eval.precision, j["re"].get<std::string>(), j["im"].get<std::string>(), j["err"].get<std::string>()};
        if (cache) cache->store(*rec);
    }
    CaseResult r;
    r.name = key;
    r.details["re"] = rec->re;
    r.details["im"] = rec->im;
    r.details["err"] = rec->err;
    rep.results.push_back(std::move(r));
    return finish(rep, ctx);
}

int cmd_regularize(Context& ctx)
{
    const Index idx = parse_expr(ctx.opt.expr);
    Report rep;
    rep.command = "regularize";
    rep.config = Json{{"index", idx.to_string()}, {"word", index_to_word(idx).to_string()}};
    CaseResult sh;
    sh.name = "shuffle";
    sh.coefficients = symbolic_json(shuffle_reg_const(idx));
    rep.results.push_back(std::move(sh));
    CaseResult st;
    st.name = "harmonic";
    st.coefficients = symbolic_json(stuffle_reg_const(idx));
    rep.results.push_back(std::move(st));
    return finish(rep, ctx);
}

int cmd_csmzv(Context& ctx)
{
    const Index idx = parse_expr(ctx.opt.expr);
    const AppConfig cfg = ctx.config(40);
    const Alpha alpha(ctx.opt.alpha, idx.modulus());
    const SymbolicValue v = ctx.opt.star ? csmzv_st_expand(idx, alpha) : csmzv_sh_expand(idx, alpha);
    Report rep;
    rep.command = "csmzv";
    rep.config = eval_config_json(cfg);
    rep.config["alpha"] = alpha.value();
    rep.config["regularization"] = ctx.opt.star ? "harmonic" : "shuffle";
    CaseResult r;
    r.name = idx.to_string();
    r.coefficients = symbolic_json(v);
    if (ctx.opt.evaluate) {
        WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg.eval)));
        r.details["value"] = value_json(eval_symbolic(v, cfg.eval), cfg.eval.precision);
    }
    rep.results.push_back(std::move(r));
    return finish(rep, ctx);
}

int cmd_verify(Context& ctx)
{
    check_modulus(ctx.opt.modulus);
    check_weight(ctx.opt.max_weight);
    const std::string& s = ctx.opt.suite;
    const bool relation_suite = s == "parity" || s == "harmonic-closure";
    const AppConfig cfg = ctx.config(relation_suite ? 60 : 40);
    const int n = ctx.opt.modulus;
    const int w = ctx.opt.max_weight;
    Report rep;
    if (s == "shuffle") rep = suite_shuffle(n, w, cfg);
    else if (s == "stuffle") rep = suite_stuffle(n, w, cfg);
    else if (s == "reg-formula") rep = suite_reg_formula(n, w, cfg);
    else if (s == "antipode") rep = suite_antipode(n, w, cfg);
    else if (s == "parity") rep = suite_parity(n, w, cfg);
    else if (s == "harmonic-closure") rep = suite_harmonic_closure(n, w, cfg);
    else if (s == "closed-forms") rep = suite_closed_forms(n, cfg);
    else throw DomainError("unknown suite '" + s + "'");
    return finish(rep, ctx);
}

int cmd_span(Context& ctx)
{
    check_modulus(ctx.opt.modulus);
    check_weight(ctx.opt.weight);
    const AppConfig cfg = ctx.config(60);
    return finish(span_report(ctx.opt.modulus, Alpha(ctx.opt.alpha, ctx.opt.modulus), ctx.opt.weight, cfg), ctx);
}

// One value per line: factors joined by '*', each an index expression, "pi"
// or "pi^s" (pi meaning pi i). '#' starts a comment.
struct ValueLine {
    std::string text;
    int pi_power = 0;
    std::vector<Index> atoms;
};

std::vector<ValueLine> read_value_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::vector<ValueLine> out;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = raw.substr(0, raw.find('#'));
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        ValueLine v;
        v.text = line;
        std::size_t pos = 0;
        try {
            for (;;) {
                while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
                if (line.compare(pos, 2, "pi") == 0) {
                    pos += 2;
                    int s = 1;
                    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
                    if (pos < line.size() && line[pos] == '^') {
                        ++pos;
                        const std::size_t start = pos;
                        s = 0;
                        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) s = s * 10 + (line[pos++] - '0');
                        if (pos == start) throw ParseError("expected an exponent after '^'", pos);
                    }
                    v.pi_power += s;
                } else {
                    v.atoms.push_back(parse_index_at(line, pos));
                }
                while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
                if (pos == line.size()) break;
                if (line[pos] != '*') throw ParseError(std::string("expected '*', found '") + line[pos] + "'", pos);
                ++pos;
            }
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what() + "\n" + describe_parse_error(e, line), e.position());
        }
        out.push_back(std::move(v));
    }
    return out;
}

Index lift(const Index& idx, int modulus)
{
    if (idx.modulus() == modulus) return idx;
    if (modulus % idx.modulus() != 0)
        throw ModulusMismatch(idx.modulus(), modulus);
    std::vector<int> e;
    for (int x : idx.xi_exponents()) e.push_back(x * (modulus / idx.modulus()));
    return Index(idx.k(), e, modulus);
}

int cmd_relations(Context& ctx)
{
    const auto lines = read_value_file(ctx.opt.file);
    if (lines.size() < 2) throw DomainError("relations: need at least two values");
    int n = ctx.opt.modulus;
    if (n <= 0) {
        n = 1;
        for (const auto& l : lines)
            for (const auto& a : l.atoms) n = std::lcm(n, a.modulus());
    }
    std::vector<SymbolicValue> values;
    for (const auto& l : lines) {
        std::vector<Index> atoms;
        for (const auto& a : l.atoms) {
            if (!a.is_admissible()) throw DomainError("relations: " + a.to_string() + " is not admissible");
            atoms.push_back(lift(a, n));
        }
        values.push_back(SymbolicValue::from_term(n, make_term(l.pi_power, atoms), CycloNumber(n, 1)));
    }
    const int needed = 20 + 10 * euler_phi(n) * static_cast<int>(values.size());
    AppConfig cfg = ctx.config(std::max(60, needed));
    if (ctx.opt.bound > 0) cfg.coeff_bound = ctx.opt.bound;

    RelationProblem p;
    p.modulus = n;
    p.coeff_bound = cfg.coeff_bound;
    p.precision = cfg.eval.precision;
    Evaluator ev(cfg.eval);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg.eval)));
    for (const auto& v : values) p.values.push_back(ev.symbolic(v));
    const RelationSearch found = search_relation(p);

    Report rep;
    rep.command = "relations";
    rep.config = eval_config_json(cfg);
    rep.config["N"] = n;
    Json labels = Json::array();
    for (const auto& l : lines) labels.push_back(l.text);
    rep.config["values"] = std::move(labels);
    CaseResult r;
    r.name = "relation";
    if (found.relation) {
        r.residual = residual_string(found.relation->residual);
        for (std::size_t i = 0; i < lines.size(); ++i)
            r.coefficients.push_back(Json{{"value", lines[i].text}, {"coefficient", cyclo_json(found.relation->coefficients[i])}});
        r.details["height"] = found.relation->height.str();
    } else {
        r.ok = false;
        r.residual = residual_string(found.residual_floor);
        r.details["note"] = "no relation within the coefficient bound at this precision (heuristic, not a proof)";
    }
    rep.results.push_back(std::move(r));
    return finish(rep, ctx);
}

int cmd_cache(Context& ctx)
{
    const AppConfig cfg = ctx.config(40);
    ValueCache cache(cfg.cache_path);
    Report rep;
    rep.command = "cache " + ctx.opt.cache_action;
    rep.config = Json{{"cache_path", cfg.cache_path}};
    CaseResult r;
    r.name = ctx.opt.cache_action;
    if (ctx.opt.cache_action == "clear") {
        cache.clear();
    } else {
        const CacheStats s = cache.stats();
        r.details["records"] = s.records;
        r.details["distinct_indices"] = s.distinct_indices;
        r.details["malformed_lines"] = s.malformed_lines;
    }
    rep.results.push_back(std::move(r));
    return finish(rep, ctx);
}

void add_prec(CLI::App* sub, Options& opt)
{
    sub->add_option("--prec", opt.prec, "Target decimal digits")->check(CLI::Range(10, 100000));
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env)
{
    Options opt;
    CLI::App app{"Cyclotomic multiple zeta values: evaluation, regularization and relation tests", "cmzv"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-terms", opt.overrides.max_terms, "Cutoff on series terms");
    app.add_option("--accel-order", opt.overrides.accel_order, "Tail-acceleration depth of the direct summation");
    app.add_option("--coeff-bound", opt.overrides.coeff_bound, "Bound on integer relation coefficients");
    app.add_option("--max-basis", opt.overrides.max_basis, "Largest numeric basis in span tests");
    app.add_option("--cache", opt.overrides.cache_path, "Value cache file");
    app.add_flag("--no-cache", opt.overrides.no_cache, "Do not read or write the value cache");
    app.add_option("--config", opt.config_path, "Config file (JSON)");

    std::function<int(Context&)> handler;

    auto* eval = app.add_subcommand("eval", "Evaluate an admissible index");
    eval->add_option("expr", opt.expr, "Index expression ({k,...};{e,...})@N")->required();
    add_prec(eval, opt);
    eval->callback([&] { handler = cmd_eval; });

    auto* reg = app.add_subcommand("regularize", "Shuffle and harmonic regularized expansions");
    reg->add_option("expr", opt.expr)->required();
    reg->callback([&] { handler = cmd_regularize; });

    auto* cs = app.add_subcommand("csmzv", "Symmetric value expansion");
    cs->add_option("expr", opt.expr)->required();
    cs->add_option("--alpha", opt.alpha, "Twist exponent mod N")->required();
    cs->add_flag("--star", opt.star, "Harmonic regularized version");
    cs->add_flag("--eval", opt.evaluate, "Also evaluate numerically");
    add_prec(cs, opt);
    cs->callback([&] { handler = cmd_csmzv; });

    auto* ver = app.add_subcommand("verify", "Run an identity suite");
    ver->add_option("suite", opt.suite)
        ->required()
        ->check(CLI::IsMember({"shuffle", "stuffle", "reg-formula", "antipode", "parity", "harmonic-closure", "closed-forms"}));
    ver->add_option("--N", opt.modulus)->required();
    ver->add_option("--max-weight", opt.max_weight)->required();
    add_prec(ver, opt);
    ver->callback([&] { handler = cmd_verify; });

    auto* span = app.add_subcommand("span", "Spanning test by symmetric values");
    span->add_option("--N", opt.modulus)->required();
    span->add_option("--alpha", opt.alpha)->required();
    span->add_option("--weight", opt.weight)->required();
    add_prec(span, opt);
    span->callback([&] { handler = cmd_span; });

    auto* rel = app.add_subcommand("relations", "Integer relation among values listed in a file");
    opt.modulus = 0;
    rel->add_option("--file", opt.file)->required();
    rel->add_option("--bound", opt.bound, "Coefficient bound")->required()->check(CLI::PositiveNumber);
    rel->add_option("--N", opt.modulus, "Coefficient field Q(zeta_N); default lcm of the index moduli");
    add_prec(rel, opt);
    rel->callback([&] { handler = cmd_relations; });

    auto* cache = app.add_subcommand("cache", "Inspect or clear the value cache");
    cache->add_option("action", opt.cache_action)->required()->check(CLI::IsMember({"clear", "stats"}));
    cache->callback([&] { handler = cmd_cache; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    Context ctx{opt, env, out, err};
    try {
        return handler(ctx);
    } catch (const ParseError& e) {
        if (opt.expr.empty()) err << "error: " << e.what() << "\n";
        else err << describe_parse_error(e, opt.expr);
        return exit_usage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const PrecisionUnreachable& e) {
        err << "error: " << e.what() << "\n";
        return exit_precision;
    } catch (const EnumerationCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_precision;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace cmzv::app
