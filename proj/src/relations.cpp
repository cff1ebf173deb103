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

#include "cmzv/relations.hpp"

#include "cmzv/errors.hpp"
#include "cmzv/lattice.hpp"
#include "cmzv/regularization.hpp"

#include <algorithm>

namespace cmzv {

namespace {

Integer round_to_integer(const Real& x)
{
    const Real r = boost::multiprecision::round(x);
    std::string digits = r.str(0, std::ios_base::fixed);
    const auto dot = digits.find('.');
    if (dot != std::string::npos) digits.resize(dot);
    return Integer(digits);
}

Real zero_threshold(int digits)
{
    return pow10_neg(digits);
}

} // namespace

std::size_t relation_unknowns(const RelationProblem& p)
{
    return static_cast<std::size_t>(euler_phi(p.modulus)) * p.values.size();
}

RelationSearch search_relation(const RelationProblem& p)
{
    const std::size_t n = p.values.size();
    const std::size_t phi = static_cast<std::size_t>(euler_phi(p.modulus));
    const std::size_t u = n * phi;
    if (n == 0) throw DomainError("find_relation: no values");
    if (p.precision < 20 + 10 * static_cast<long>(u))
        throw DomainError("find_relation: precision " + std::to_string(p.precision) + " below 20 + 10 * " + std::to_string(u));
    if (p.coeff_bound < 1) throw DomainError("find_relation: coefficient bound must be positive");
    if (p.required && *p.required >= n) throw DomainError("find_relation: required index out of range");

    WorkingPrecision guard(static_cast<unsigned>(p.precision + 20));
    // Column vectors v_i * zeta^j, grouped by value.
    std::vector<BigComplex> columns;
    columns.reserve(u);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < phi; ++j) {
            const BigComplex z = root_embed(RootOfUnity(static_cast<std::int64_t>(j), p.modulus), p.precision + 20);
            columns.push_back(p.values[i] * z);
        }
    }
    Real scale = 1;
    for (int i = 0; i < p.precision; ++i) scale *= 10;

    IntMatrix lattice(u, std::vector<Integer>(u + 2, Integer(0)));
    for (std::size_t a = 0; a < u; ++a) {
        lattice[a][a] = 1;
        lattice[a][u] = round_to_integer(columns[a].re * scale);
        lattice[a][u + 1] = round_to_integer(columns[a].im * scale);
    }
    lll_reduce(lattice);

    const Real accept = zero_threshold(p.precision / 2);
    RelationSearch out;
    out.residual_floor = -1;
    for (const auto& row : lattice) {
        if (p.required) {
            bool nonzero = false;
            for (std::size_t j = 0; j < phi; ++j) nonzero = nonzero || row[*p.required * phi + j] != 0;
            if (!nonzero) continue;
        }
        bool any = false;
        Integer height = 0;
        BigComplex sum;
        for (std::size_t a = 0; a < u; ++a) {
            if (row[a] == 0) continue;
            any = true;
            height = std::max<Integer>(height, abs(row[a]));
            sum += columns[a] * Real(row[a]);
        }
        if (!any) continue;
        const Real residual = sum.abs();
        if (out.residual_floor < 0 || residual < out.residual_floor) out.residual_floor = residual;
        if (residual >= accept || height > p.coeff_bound) continue;
        if (out.relation && out.relation->height <= height) continue;
        Relation rel;
        rel.residual = residual;
        rel.height = height;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> powers(phi);
            for (std::size_t j = 0; j < phi; ++j) powers[j] = Rational(row[i * phi + j]);
            rel.coefficients.push_back(CycloNumber::from_powers(p.modulus, powers));
        }
        out.relation = std::move(rel);
    }
    if (out.residual_floor < 0) out.residual_floor = 0;
    return out;
}

std::optional<Relation> find_relation(const RelationProblem& p)
{
    return search_relation(p).relation;
}

int relation_working_precision(int modulus, std::size_t values, int floor_precision)
{
    const long needed = 20 + 10 * static_cast<long>(euler_phi(modulus)) * static_cast<long>(values);
    return static_cast<int>(std::max<long>(floor_precision, needed));
}

NumericBasis numeric_basis(int modulus, const std::vector<BigComplex>& values, const CongruenceOptions& opt)
{
    NumericBasis basis;
    basis.modulus = modulus;
    basis.working_precision = relation_working_precision(modulus, std::min(values.size(), opt.max_basis) + 1, opt.eval.precision);
    WorkingPrecision guard(static_cast<unsigned>(basis.working_precision + 10));
    const Real zero = zero_threshold(basis.working_precision / 2);
    for (std::size_t g = 0; g < values.size(); ++g) {
        if (values[g].abs() < zero) continue;
        if (!basis.values.empty()) {
            RelationProblem p;
            p.modulus = modulus;
            p.values = basis.values;
            p.values.push_back(values[g]);
            p.coeff_bound = opt.coeff_bound;
            p.precision = basis.working_precision;
            p.required = p.values.size() - 1;
            if (find_relation(p)) continue;
        }
        if (basis.members.size() == opt.max_basis)
            throw EnumerationCapExceeded("numeric basis exceeds " + std::to_string(opt.max_basis) + " elements");
        basis.members.push_back(g);
        basis.values.push_back(values[g]);
    }
    return basis;
}

Witness express_in_basis(const BigComplex& target, const NumericBasis& basis, std::size_t generator_count, const CongruenceOptions& opt)
{
    const int n = basis.modulus;
    WorkingPrecision guard(static_cast<unsigned>(basis.working_precision + 10));
    Witness out;
    out.residual_floor = target.abs();
    Decomposition dec;
    dec.coefficients.assign(generator_count, CycloNumber(n));
    if (target.abs() < zero_threshold(basis.working_precision / 2)) {
        dec.residual = target.abs();
        out.decomposition = std::move(dec);
        return out;
    }
    if (basis.values.empty()) return out;

    RelationProblem p;
    p.modulus = n;
    p.values.push_back(target);
    p.values.insert(p.values.end(), basis.values.begin(), basis.values.end());
    p.coeff_bound = opt.coeff_bound;
    p.precision = std::max(basis.working_precision, relation_working_precision(n, p.values.size(), opt.eval.precision));
    p.required = 0;
    const RelationSearch found = search_relation(p);
    out.residual_floor = found.residual_floor;
    if (!found.relation) return out;

    const CycloNumber inv = found.relation->coefficients[0].inverse();
    BigComplex rest = target;
    for (std::size_t b = 0; b < basis.members.size(); ++b) {
        const CycloNumber d = -(found.relation->coefficients[b + 1] * inv);
        dec.coefficients[basis.members[b]] = d;
        rest -= basis.values[b] * cyclo_embed(d, basis.working_precision + 10);
    }
    dec.residual = rest.abs();
    out.decomposition = std::move(dec);
    return out;
}

std::optional<Decomposition> congruence_witness(const SymbolicValue& target, const std::vector<SymbolicValue>& generators,
                                                const CongruenceOptions& opt)
{
    const int n = target.modulus();
    EvalConfig cfg = opt.eval;
    cfg.precision = relation_working_precision(n, std::min(generators.size(), opt.max_basis) + 1, opt.eval.precision);
    Evaluator ev(cfg);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg)));
    std::vector<BigComplex> values;
    values.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.modulus() != n) throw ModulusMismatch(n, g.modulus());
        values.push_back(ev.symbolic(g));
    }
    const NumericBasis basis = numeric_basis(n, values, opt);
    return express_in_basis(ev.symbolic(target), basis, generators.size(), opt).decomposition;
}

bool SpanReport::all_expressed() const
{
    return std::all_of(cases.begin(), cases.end(), [](const SpanCase& c) { return c.expressed; });
}

std::vector<std::pair<std::string, SymbolicValue>> spanning_generators(int modulus, const Alpha& alpha, int weight)
{
    if (alpha.modulus() != modulus) throw ModulusMismatch(modulus, alpha.modulus());
    std::vector<std::pair<std::string, SymbolicValue>> out;
    for (const auto& t : pi_shifted_terms(modulus, weight))
        out.emplace_back(t.to_string(), SymbolicValue::from_term(modulus, t, CycloNumber(modulus, 1)));
    for (const auto& idx : indices_of_weight(modulus, weight, static_cast<std::size_t>(weight)))
        out.emplace_back("S" + idx.to_string(), csmzv_sh_expand(idx, alpha));
    return out;
}

SpanReport spanning_test(int modulus, const Alpha& alpha, int weight, const CongruenceOptions& opt)
{
    if (weight < 1) throw DomainError("spanning_test: weight must be positive");
    const auto gens = spanning_generators(modulus, alpha, weight);
    SpanReport report;
    report.modulus = modulus;
    report.alpha = alpha;
    report.weight = weight;
    for (const auto& g : gens) report.generators.push_back(g.first);

    EvalConfig cfg = opt.eval;
    cfg.precision = relation_working_precision(modulus, std::min(gens.size(), opt.max_basis) + 1, opt.eval.precision);
    report.working_precision = cfg.precision;
    Evaluator ev(cfg);
    WorkingPrecision guard(static_cast<unsigned>(working_digits(cfg)));
    std::vector<BigComplex> values;
    values.reserve(gens.size());
    for (const auto& g : gens) values.push_back(ev.symbolic(g.second));
    const NumericBasis basis = numeric_basis(modulus, values, opt);
    report.basis = basis.members;

    for (const auto& atom : admissible_indices_of_weight(modulus, weight, static_cast<std::size_t>(weight))) {
        SpanCase c{atom, false, Real(0), {}};
        const Witness w = express_in_basis(ev.cmzv(atom), basis, gens.size(), opt);
        if (w.decomposition) {
            c.expressed = true;
            c.residual = w.decomposition->residual;
            c.coefficients = w.decomposition->coefficients;
        } else {
            c.residual = w.residual_floor;
        }
        report.cases.push_back(std::move(c));
    }
    return report;
}

} // namespace cmzv
