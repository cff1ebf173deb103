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

#include "cmzv/app/suites.hpp"

#include "cmzv/numerics.hpp"
#include "cmzv/regularization.hpp"
#include "cmzv/relations.hpp"

#include <map>
#include <tuple>

namespace cmzv::app {

std::vector<Word> words_of_length(int modulus, int length)
{
    std::vector<Letter> alphabet{Letter::zero()};
    for (int e = 0; e < modulus; ++e) alphabet.push_back(Letter::root_exponent(e));
    std::vector<Word> out{Word(modulus)};
    for (int i = 0; i < length; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (const auto& l : alphabet) next.push_back(w.appended(l));
        out = std::move(next);
    }
    return out;
}

namespace {

Real tolerance(const AppConfig& cfg)
{
    return pow10_neg(cfg.eval.precision - 5);
}

CaseResult numeric_case(std::string name, const BigComplex& diff, const AppConfig& cfg)
{
    CaseResult r;
    r.name = std::move(name);
    const Real res = diff.abs();
    r.ok = res < tolerance(cfg);
    r.residual = residual_string(res);
    return r;
}

Json base_config(const AppConfig& cfg, int modulus, int max_weight)
{
    Json j = eval_config_json(cfg);
    j["N"] = modulus;
    j["max_weight"] = max_weight;
    return j;
}

std::vector<Index> all_indices(int modulus, int min_weight, int max_weight, std::size_t max_depth)
{
    std::vector<Index> out;
    for (int w = min_weight; w <= max_weight; ++w)
        for (const auto& idx : indices_of_weight(modulus, w, max_depth))
            if (idx.depth() > 0) out.push_back(idx);
    return out;
}

Json decomposition_json(const std::vector<std::string>& labels, const std::vector<CycloNumber>& coeffs)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        out.push_back(Json{{"generator", labels[i]}, {"coefficient", cyclo_json(coeffs[i])}});
    }
    return out;
}

const char* heuristic_note = "no relation within the coefficient bound at this precision (heuristic, not a proof)";

// Generators evaluated once, reduced to a numeric basis, then reused for
// every target of the same (weight, depth) class.
struct SpanContext {
    std::vector<std::string> labels;
    NumericBasis basis;
};

SpanContext build_span(const std::vector<Term>& terms, int modulus, const AppConfig& cfg, Evaluator& ev)
{
    SpanContext ctx;
    std::vector<BigComplex> values;
    for (const auto& t : terms) {
        ctx.labels.push_back(t.to_string());
        values.push_back(ev.symbolic(SymbolicValue::from_term(modulus, t, CycloNumber(modulus, 1))));
    }
    ctx.basis = numeric_basis(modulus, values, cfg.congruence());
    return ctx;
}

CaseResult witness_case(std::string name, const BigComplex& target, const SpanContext& ctx, const AppConfig& cfg)
{
    CaseResult r;
    r.name = std::move(name);
    const Witness w = express_in_basis(target, ctx.basis, ctx.labels.size(), cfg.congruence());
    if (w.decomposition && w.decomposition->residual < pow10_neg(cfg.eval.precision / 2)) {
        r.ok = true;
        r.residual = residual_string(w.decomposition->residual);
        r.coefficients = decomposition_json(ctx.labels, w.decomposition->coefficients);
    } else {
        r.ok = false;
        r.residual = residual_string(w.residual_floor);
        r.details["note"] = heuristic_note;
    }
    return r;
}

int span_precision(int modulus, std::size_t generators, const AppConfig& cfg)
{
    return relation_working_precision(modulus, std::min(generators, cfg.max_basis) + 1, cfg.eval.precision);
}

} // namespace

Report suite_closed_forms(int max_modulus, const AppConfig& cfg)
{
    Report rep;
    rep.command = "verify closed-forms";
    rep.config = eval_config_json(cfg);
    rep.config["max_N"] = max_modulus;
    Evaluator ev(cfg.eval);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg.eval)));
    const Real tol = pow10_neg(cfg.eval.precision);
    for (int n = 1; n <= max_modulus; ++n) {
        for (int e = 1; e < n; ++e) {
            const Index idx({1}, std::vector<int>{e}, n);
            const BigComplex diff = ev.cmzv(idx) - eval_weight1_closed(RootOfUnity(e, n), cfg.eval);
            CaseResult r;
            r.name = idx.to_string() + " = -log(1 - xi)";
            const Real res = diff.abs();
            r.ok = res < tol;
            r.residual = residual_string(res);
            rep.results.push_back(std::move(r));
        }
    }
    const Index z2({2}, std::vector<int>{0}, 1);
    BigComplex lhs = ev.cmzv(z2) * Real(6);
    lhs += ev.pi_i_power(2);
    rep.results.push_back(numeric_case("6 zeta(2) + (pi i)^2 = 0", lhs, cfg));
    return rep;
}

Report suite_shuffle(int modulus, int max_weight, const AppConfig& cfg)
{
    Report rep;
    rep.command = "verify shuffle";
    rep.config = base_config(cfg, modulus, max_weight);
    Evaluator ev(cfg.eval);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg.eval)));
    std::vector<Word> words;
    for (int len = 1; len < max_weight; ++len)
        for (const auto& w : words_of_length(modulus, len))
            if (w.in_h0()) words.push_back(w);
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a; b < words.size(); ++b) {
            if (static_cast<int>(words[a].size() + words[b].size()) > max_weight) continue;
            const BigComplex lhs = ev.ncpoly(shuffle(NCPoly(words[a]), NCPoly(words[b])));
            const BigComplex rhs = ev.word(words[a]) * ev.word(words[b]);
            rep.results.push_back(numeric_case(words[a].to_string() + " sh " + words[b].to_string(), lhs - rhs, cfg));
        }
    }
    return rep;
}

Report suite_stuffle(int modulus, int max_weight, const AppConfig& cfg)
{
    Report rep;
    rep.command = "verify stuffle";
    rep.config = base_config(cfg, modulus, max_weight);
    Evaluator ev(cfg.eval);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg.eval)));
    std::vector<Index> atoms;
    for (int w = 1; w < max_weight; ++w)
        for (const auto& idx : admissible_indices_of_weight(modulus, w, static_cast<std::size_t>(w))) atoms.push_back(idx);
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        for (std::size_t b = a; b < atoms.size(); ++b) {
            if (atoms[a].weight() + atoms[b].weight() > max_weight) continue;
            const BigComplex lhs = ev.symbolic(SymbolicValue::from_combination(stuffle(atoms[a], atoms[b])));
            const BigComplex rhs = ev.cmzv(atoms[a]) * ev.cmzv(atoms[b]);
            rep.results.push_back(numeric_case(atoms[a].to_string() + " * " + atoms[b].to_string(), lhs - rhs, cfg));
        }
    }
    return rep;
}

Report suite_reg_formula(int modulus, int max_weight, const AppConfig& cfg)
{
    Report rep;
    rep.command = "verify reg-formula";
    rep.config = base_config(cfg, modulus, max_weight);
    Evaluator ev(cfg.eval);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg.eval)));
    const Word x1(modulus, {Letter::root_exponent(0)});

    std::vector<Letter> etas{Letter::zero()};
    for (int e = 1; e < modulus; ++e) etas.push_back(Letter::root_exponent(e));
    for (int l = 0; l <= 2; ++l) {
        const Word tail = Word(modulus, std::vector<Letter>(static_cast<std::size_t>(l), Letter::root_exponent(0)));
        for (int ulen = 0; ulen + 1 + l <= max_weight; ++ulen) {
            for (const auto& u : words_of_length(modulus, ulen)) {
                for (const auto& eta : etas) {
                    const Word head = u.appended(eta);
                    if (!head.in_h1()) continue;
                    const Word w = head + tail;
                    const BigComplex lhs = ev.ncpoly(shuffle_reg_decompose(w).constant_term());
                    NCPoly moved = shuffle(NCPoly(u), NCPoly(tail)).appended(eta);
                    if (l % 2 == 1) moved *= CycloNumber(modulus, -1);
                    const BigComplex rhs = ev.ncpoly(moved);
                    rep.results.push_back(numeric_case("Zsh(" + w.to_string() + ")", lhs - rhs, cfg));
                }
            }
        }
    }
    for (int len = 1; len <= max_weight; ++len) {
        for (const auto& w : words_of_length(modulus, len)) {
            if (!w.in_h1()) continue;
            CaseResult r;
            r.name = "reconstruct(" + w.to_string() + ")";
            const RegDecomposition d = shuffle_reg_decompose(w);
            bool ok = d.reconstruct() == NCPoly(w);
            for (const auto& c : d.coefficients) ok = ok && c.support_in_h0();
            r.ok = ok;
            r.details["exact"] = true;
            rep.results.push_back(std::move(r));
        }
    }
    return rep;
}

Report suite_antipode(int modulus, int max_weight, const AppConfig& cfg, int max_depth)
{
    Report rep;
    rep.command = "verify antipode";
    rep.config = base_config(cfg, modulus, max_weight);
    rep.config["max_depth"] = max_depth;
    Evaluator ev(cfg.eval);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg.eval)));
    for (const auto& idx : all_indices(modulus, 1, max_weight, static_cast<std::size_t>(max_depth))) {
        const SymbolicValue s = antipode_sum(idx);
        CaseResult r = numeric_case(idx.to_string(), ev.symbolic(s), cfg);
        r.details["exact_zero"] = s.linearized().is_zero();
        rep.results.push_back(std::move(r));
    }
    return rep;
}

Report suite_parity(int modulus, int max_weight, const AppConfig& cfg)
{
    Report rep;
    rep.command = "verify parity";
    rep.config = base_config(cfg, modulus, max_weight);
    std::map<std::pair<int, int>, PDSpanSet> sets;
    int wp = cfg.eval.precision;
    const auto indices = all_indices(modulus, 1, max_weight, static_cast<std::size_t>(max_weight));
    for (const auto& idx : indices) {
        const std::pair<int, int> key{idx.weight(), static_cast<int>(idx.depth())};
        if (!sets.count(key)) sets.emplace(key, pd_span_set(modulus, key.first, key.second));
        wp = std::max(wp, span_precision(modulus, sets.at(key).generators.size(), cfg));
    }
    rep.config["working_precision"] = wp;
    EvalConfig hi = cfg.eval;
    hi.precision = wp;
    Evaluator ev(hi);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(hi)));
    std::map<std::pair<int, int>, SpanContext> spans;
    for (const auto& idx : indices) {
        const std::pair<int, int> key{idx.weight(), static_cast<int>(idx.depth())};
        const SymbolicValue target = parity_defect(idx);
        if (target.linearized().is_zero()) {
            CaseResult r;
            r.name = idx.to_string();
            r.details["exact_zero"] = true;
            rep.results.push_back(std::move(r));
            continue;
        }
        if (!spans.count(key)) spans.emplace(key, build_span(sets.at(key).generators, modulus, cfg, ev));
        rep.results.push_back(witness_case(idx.to_string(), ev.symbolic(target), spans.at(key), cfg));
    }
    return rep;
}

Report suite_harmonic_closure(int modulus, int max_weight, const AppConfig& cfg)
{
    Report rep;
    rep.command = "verify harmonic-closure";
    rep.config = base_config(cfg, modulus, max_weight);
    int wp = cfg.eval.precision;
    for (int w = 2; w <= max_weight; ++w) wp = std::max(wp, span_precision(modulus, pi_shifted_terms(modulus, w).size(), cfg));
    rep.config["working_precision"] = wp;
    EvalConfig hi = cfg.eval;
    hi.precision = wp;
    Evaluator ev(hi);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(hi)));
    std::map<int, SpanContext> spans;
    const auto indices = all_indices(modulus, 1, max_weight - 1, static_cast<std::size_t>(max_weight));
    for (int a = 0; a < modulus; ++a) {
        const Alpha alpha(a, modulus);
        if (!alpha.is_unit()) continue;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            for (std::size_t j = i; j < indices.size(); ++j) {
                const int w = indices[i].weight() + indices[j].weight();
                if (w > max_weight) continue;
                SymbolicValue diff = csmzv_sh_expand(indices[i], alpha) * csmzv_sh_expand(indices[j], alpha);
                const IndexCombination product = stuffle(indices[i], indices[j]);
                for (const auto& [idx, c] : product.terms()) diff -= csmzv_sh_expand(idx, alpha) * c;
                if (!spans.count(w)) spans.emplace(w, build_span(pi_shifted_terms(modulus, w), modulus, cfg, ev));
                const std::string name =
                    "alpha=" + std::to_string(a) + " " + indices[i].to_string() + " * " + indices[j].to_string();
                rep.results.push_back(witness_case(name, ev.symbolic(diff), spans.at(w), cfg));
            }
        }
    }
    return rep;
}

Report span_report(int modulus, const Alpha& alpha, int weight, const AppConfig& cfg)
{
    Report rep;
    rep.command = "span";
    rep.config = eval_config_json(cfg);
    rep.config["N"] = modulus;
    rep.config["alpha"] = alpha.value();
    rep.config["alpha_is_unit"] = alpha.is_unit();
    rep.config["weight"] = weight;
    const SpanReport sr = spanning_test(modulus, alpha, weight, cfg.congruence());
    rep.config["working_precision"] = sr.working_precision;
    Json basis = Json::array();
    for (std::size_t b : sr.basis) basis.push_back(sr.generators[b]);
    rep.config["basis"] = std::move(basis);
    WorkingPrecision guard(static_cast<unsigned>(sr.working_precision + 10));
    for (const auto& c : sr.cases) {
        CaseResult r;
        r.name = c.atom.to_string();
        r.residual = residual_string(c.residual);
        r.ok = c.expressed && c.residual < pow10_neg(cfg.eval.precision / 2);
        if (c.expressed) r.coefficients = decomposition_json(sr.generators, c.coefficients);
        else r.details["note"] = heuristic_note;
        rep.results.push_back(std::move(r));
    }
    return rep;
}

} // namespace cmzv::app
