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

// Desk-scale acceptance run: one PASS/FAIL line per criterion, exit status 0
// only when every line passes.

#include "cmzv/app/config.hpp"
#include "cmzv/app/report.hpp"
#include "cmzv/app/suites.hpp"
#include "cmzv/numerics.hpp"
#include "cmzv/relations.hpp"
#include "cmzv/symmetric_values.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

using namespace cmzv;
using namespace cmzv::app;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> dumps;
};

AppConfig config(int precision)
{
    AppConfig cfg;
    cfg.eval.precision = precision;
    cfg.cache_enabled = false;
    return cfg;
}

// Folds suite reports into one outcome and names the first failing case.
class Collector {
public:
    // An empty report is accepted only when the range has nothing to check.
    void add(const Report& rep, const std::string& label, bool may_be_empty = false)
    {
        record(rep);
        if (rep.results.empty() && !may_be_empty) {
            out_.pass = false;
            note(label + " checked no cases");
        }
        for (const auto& r : rep.results) {
            if (r.ok) continue;
            out_.pass = false;
            note(label + " " + r.name + " residual " + r.residual);
        }
    }

    // Keeps the report for the determinism pass without judging its cases.
    void record(const Report& rep)
    {
        cases_ += rep.results.size();
        out_.dumps.push_back(rep.dump());
    }

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            out_.pass = false;
            note(what);
        }
    }

    Outcome finish(const std::string& what)
    {
        out_.summary = what + " (" + std::to_string(cases_) + " cases)" + (first_.empty() ? "" : "; first failure: " + first_);
        return out_;
    }

private:
    void note(const std::string& s)
    {
        if (first_.empty()) first_ = s;
    }

    Outcome out_;
    std::size_t cases_ = 0;
    std::string first_;
};

Outcome closed_forms()
{
    Collector c;
    c.add(suite_closed_forms(6, config(40)), "closed-forms");
    return c.finish("weight-one closed forms for N <= 6 and the Euler identity at 40 digits");
}

Outcome shuffle()
{
    Collector c;
    for (int n : {1, 2, 3}) c.add(suite_shuffle(n, 4, config(40)), "N=" + std::to_string(n));
    return c.finish("shuffle homomorphism, N in {1,2,3}, weight <= 4, residual < 1e-35");
}

Outcome reg_formula()
{
    Collector c;
    for (int n : {2, 3}) c.add(suite_reg_formula(n, 4, config(40)), "N=" + std::to_string(n));
    return c.finish("regularization formula and exact reconstruction, N in {2,3}, weight <= 4");
}

Outcome antipode()
{
    Collector c;
    for (int n = 1; n <= 4; ++n) c.add(suite_antipode(n, 3, config(40), 3), "N=" + std::to_string(n));
    return c.finish("antipode sums vanish, N <= 4, weight <= 3, depth <= 3");
}

Outcome stuffle()
{
    Collector c;
    for (int n = 1; n <= 4; ++n) c.add(suite_stuffle(n, 4, config(40)), "N=" + std::to_string(n));
    return c.finish("harmonic product expansion, N <= 4, weight <= 4, residual < 1e-35");
}

Outcome parity()
{
    Collector c;
    for (int n = 1; n <= 3; ++n) c.add(suite_parity(n, 3, config(60)), "N=" + std::to_string(n));
    return c.finish("parity defect in the PD and pi i span, N <= 3, weight <= 3, height <= 1e6, residual < 1e-30");
}

Outcome spanning()
{
    Collector c;
    auto run = [&](int n, int w) {
        for (int a = 0; a < n; ++a) {
            const Alpha alpha(a, n);
            if (!alpha.is_unit()) continue;
            const Report rep = span_report(n, alpha, w, config(60));
            // N = 1 has no admissible atom of weight one.
            c.add(rep, "N=" + std::to_string(n) + " alpha=" + std::to_string(a) + " w=" + std::to_string(w), n == 1 && w == 1);
        }
    };
    for (int n = 1; n <= 4; ++n)
        for (int w = 1; w <= 2; ++w) run(n, w);
    for (int n = 1; n <= 2; ++n) run(n, 3);
    return c.finish("spanning by symmetric values, N <= 4 with w <= 2 and N <= 2 with w = 3, residual < 1e-30");
}

Outcome counterexample()
{
    Collector c;
    const Index atom({1}, {1}, 3);
    const EvalConfig ev = config(60).eval;
    WorkingPrecision guard(static_cast<unsigned>(working_digits(ev)));

    Report rep;
    rep.command = "counterexample";

    // alpha = 0: S is a rational multiple of pi i.
    RelationProblem q;
    q.modulus = 1;
    q.coeff_bound = 1000;
    q.precision = 60;
    q.required = 0;
    q.values = {eval_symbolic(csmzv_sh_expand(atom, Alpha(0, 3)), ev), pi_i(ev)};
    const auto rational = find_relation(q);
    CaseResult r0;
    r0.name = "S_0" + atom.to_string() + " in Q pi i";
    r0.ok = rational.has_value();
    if (rational) {
        r0.residual = residual_string(rational->residual);
        for (const auto& x : rational->coefficients) r0.coefficients.push_back(cyclo_json(x));
    }
    rep.results.push_back(r0);

    // The spanning test must reject this atom for alpha = 0.
    const Report span = span_report(3, Alpha(0, 3), 1, config(60));
    rep.results.insert(rep.results.end(), span.results.begin(), span.results.end());
    bool rejected = false;
    for (const auto& s : span.results)
        if (s.name == atom.to_string()) rejected = !s.ok;
    c.require(rejected, "spanning test accepted " + atom.to_string() + " for alpha = 0");

    // alpha = 1: no K_3 relation with pi i.
    RelationProblem u;
    u.modulus = 3;
    u.coeff_bound = 1000000;
    u.precision = 60;
    u.required = 0;
    u.values = {eval_symbolic(csmzv_sh_expand(atom, Alpha(1, 3)), ev), pi_i(ev)};
    const RelationSearch none = search_relation(u);
    CaseResult r1;
    r1.name = "S_1" + atom.to_string() + " not in K_3 pi i";
    r1.ok = !none.relation.has_value();
    r1.residual = residual_string(none.residual_floor);
    rep.results.push_back(r1);

    c.require(r0.ok, "no rational relation with pi i for alpha = 0");
    c.require(r1.ok, "unexpected K_3 relation with pi i for alpha = 1");
    c.record(rep);
    return c.finish("alpha = 0 fails at N = 3, w = 1; alpha = 1 has no pi i relation");
}

using Criterion = std::function<Outcome()>;

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{closed_forms, shuffle,  reg_formula, antipode,
                                            stuffle,      parity,   spanning,    counterexample};
    return all;
}

void print(int number, bool pass, const std::string& text, double seconds)
{
    std::printf("%s criterion %d: %s [%.1f s]\n", pass ? "PASS" : "FAIL", number, text.c_str(), seconds);
    std::fflush(stdout);
}

} // namespace

int main()
{
    using clock = std::chrono::steady_clock;
    bool all = true;
    std::vector<std::vector<std::string>> first;
    for (std::size_t i = 0; i < criteria().size(); ++i) {
        const auto t0 = clock::now();
        Outcome o;
        try {
            o = criteria()[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("error: ") + e.what();
        }
        const double dt = std::chrono::duration<double>(clock::now() - t0).count();
        print(static_cast<int>(i + 1), o.pass, o.summary, dt);
        all = all && o.pass;
        first.push_back(o.dumps);
    }

    // Determinism: a second pass with fresh evaluators must reproduce every report.
    const auto t0 = clock::now();
    bool same = true;
    std::string where;
    for (std::size_t i = 0; i < criteria().size(); ++i) {
        Outcome o;
        try {
            o = criteria()[i]();
        } catch (const std::exception& e) {
            o.dumps.clear();
        }
        if (o.dumps != first[i]) {
            same = false;
            if (where.empty()) where = "; criterion " + std::to_string(i + 1) + " differs";
        }
    }
    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
    print(9, same, "second run of criteria 1-8 reproduces the reports byte for byte" + where, dt);
    all = all && same;
    return all ? 0 : 1;
}
