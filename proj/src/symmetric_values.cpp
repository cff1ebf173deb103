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

#include "cmzv/symmetric_values.hpp"

#include "cmzv/errors.hpp"
#include "cmzv/regularization.hpp"
#include "cmzv/word_algebra.hpp"

#include <algorithm>
#include <set>

namespace cmzv {

Alpha::Alpha(long value, int modulus) : value_(0), modulus_(modulus)
{
    if (modulus <= 0) throw DomainError("Alpha: modulus must be positive");
    long v = value % modulus;
    if (v < 0) v += modulus;
    value_ = static_cast<int>(v);
}

bool Alpha::is_unit() const
{
    return gcd(value_, modulus_) == 1;
}

namespace {

CycloNumber twist(const Index& idx, std::size_t j, const Alpha& alpha)
{
    const int n = idx.modulus();
    RootOfUnity prod = RootOfUnity::one(n);
    int weight = 0;
    for (std::size_t i = j; i < idx.depth(); ++i) {
        prod = prod * idx.xi(i);
        weight += idx.k()[i];
    }
    CycloNumber c = CycloNumber::root(prod.pow(alpha.value()));
    if (weight % 2 == 1) c = -c;
    return c;
}

void check_alpha(const Index& idx, const Alpha& alpha)
{
    if (idx.modulus() != alpha.modulus()) throw ModulusMismatch(idx.modulus(), alpha.modulus());
}

} // namespace

SymbolicValue csmzv_sh_expand(const Index& idx, const Alpha& alpha)
{
    check_alpha(idx, alpha);
    SymbolicValue out(idx.modulus());
    for (std::size_t j = 0; j <= idx.depth(); ++j) {
        const SymbolicValue front = shuffle_reg_const(idx.front(j));
        const SymbolicValue back = shuffle_reg_const(reverse_conj(idx.back(j)));
        out += (front * back) * twist(idx, j, alpha);
    }
    return out;
}

SymbolicValue csmzv_st_expand(const Index& idx, const Alpha& alpha)
{
    check_alpha(idx, alpha);
    SymbolicValue out(idx.modulus());
    for (std::size_t j = 0; j <= idx.depth(); ++j) {
        const SymbolicValue front = stuffle_reg_const(idx.front(j));
        const SymbolicValue back = stuffle_reg_const(reverse_conj(idx.back(j)));
        out += (front * back) * twist(idx, j, alpha);
    }
    return out;
}

SymbolicValue parity_defect(const Index& idx)
{
    const int parity = (idx.weight() - static_cast<int>(idx.depth())) % 2;
    SymbolicValue out = shuffle_reg_const(idx);
    const SymbolicValue mirrored = shuffle_reg_const(idx.conj());
    if (parity == 0) out -= mirrored;
    else out += mirrored;
    return out;
}

SymbolicValue antipode_sum(const Index& idx)
{
    const int n = idx.modulus();
    const std::size_t r = idx.depth();
    SymbolicValue out(n);
    for (std::size_t j = 0; j <= r; ++j) {
        const SymbolicValue front = stuffle_reg_const(idx.front(j));
        const SymbolicValue back = stuffle_reg_star(reverse(idx.back(j)));
        SymbolicValue term = front * back;
        if ((r - j) % 2 == 1) term *= CycloNumber(n, -1);
        out += term;
    }
    return out;
}

std::vector<Term> weighted_terms(int modulus, int weight, std::size_t max_depth)
{
    std::vector<Term> out;
    for (int s = weight; s >= 0; --s) {
        const int rest = weight - s;
        if (rest == 0) {
            out.push_back(make_term(s, {}));
            continue;
        }
        for (const auto& idx : admissible_indices_of_weight(modulus, rest, max_depth)) out.push_back(make_term(s, {idx}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SymbolicValue> PDSpanSet::values() const
{
    std::vector<SymbolicValue> out;
    out.reserve(generators.size());
    for (const auto& t : generators) out.push_back(SymbolicValue::from_term(modulus, t, CycloNumber(modulus, 1)));
    return out;
}

namespace {

std::size_t term_depth(const Term& t)
{
    std::size_t d = 0;
    for (const auto& a : t.atoms) d += a.depth();
    return d;
}

Term multiply_terms(const Term& a, const Term& b)
{
    std::vector<Index> atoms = a.atoms;
    atoms.insert(atoms.end(), b.atoms.begin(), b.atoms.end());
    return make_term(a.pi_power + b.pi_power, std::move(atoms));
}

void insert_capped(std::set<Term>& into, Term t, std::size_t cap)
{
    into.insert(std::move(t));
    if (into.size() > cap) throw EnumerationCapExceeded("pd_span_set: more than " + std::to_string(cap) + " generators");
}

} // namespace

PDSpanSet pd_span_set(int modulus, int weight, int depth, std::size_t cap)
{
    if (weight < 1 || depth < 1) throw DomainError("pd_span_set: weight and depth must be positive");
    std::set<Term> gens;
    for (auto& t : weighted_terms(modulus, weight, static_cast<std::size_t>(depth - 1))) insert_capped(gens, t, cap);
    for (int w1 = 1; w1 < weight; ++w1) {
        const int w2 = weight - w1;
        if (w1 > w2) break;
        const auto left = weighted_terms(modulus, w1, static_cast<std::size_t>(depth - 1));
        const auto right = weighted_terms(modulus, w2, static_cast<std::size_t>(depth - 1));
        for (const auto& a : left) {
            for (const auto& b : right) {
                const std::size_t r1 = std::max<std::size_t>(term_depth(a), 1);
                const std::size_t r2 = std::max<std::size_t>(term_depth(b), 1);
                if (r1 + r2 > static_cast<std::size_t>(depth)) continue;
                insert_capped(gens, multiply_terms(a, b), cap);
            }
        }
    }
    for (const auto& t : weighted_terms(modulus, weight - 1, static_cast<std::size_t>(depth)))
        insert_capped(gens, multiply_terms(make_term(1, {}), t), cap);
    return PDSpanSet{modulus, weight, depth, std::vector<Term>(gens.begin(), gens.end())};
}

std::vector<Term> pi_shifted_terms(int modulus, int weight)
{
    std::vector<Term> out;
    if (weight < 1) return out;
    for (const auto& t : weighted_terms(modulus, weight - 1, static_cast<std::size_t>(std::max(weight - 1, 0))))
        out.push_back(multiply_terms(make_term(1, {}), t));
    return out;
}

} // namespace cmzv
