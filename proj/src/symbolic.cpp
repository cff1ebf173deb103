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

#include "cmzv/symbolic.hpp"

#include "cmzv/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cmzv {

int Term::weight() const
{
    int w = pi_power;
    for (const auto& a : atoms) w += a.weight();
    return w;
}

std::string Term::to_string() const
{
    std::ostringstream os;
    bool first = true;
    if (pi_power > 0) {
        os << "(pi*i)^" << pi_power;
        first = false;
    }
    for (const auto& a : atoms) {
        if (!first) os << "*";
        first = false;
        os << "z" << a.to_string();
    }
    if (first) os << "1";
    return os.str();
}

Term make_term(int pi_power, std::vector<Index> atoms)
{
    if (pi_power < 0) throw DomainError("Term: negative power of pi i");
    std::erase_if(atoms, [](const Index& a) { return a.depth() == 0; });
    for (const auto& a : atoms)
        if (!a.is_admissible()) throw DomainError("Term: non-admissible atom " + a.to_string());
    std::sort(atoms.begin(), atoms.end());
    return Term{pi_power, std::move(atoms)};
}

SymbolicValue SymbolicValue::one(int modulus)
{
    return constant(CycloNumber(modulus, 1));
}

SymbolicValue SymbolicValue::constant(const CycloNumber& c)
{
    SymbolicValue v(c.modulus());
    v.add(Term{}, c);
    return v;
}

SymbolicValue SymbolicValue::atom(const Index& idx)
{
    SymbolicValue v(idx.modulus());
    v.add(make_term(0, {idx}), CycloNumber(idx.modulus(), 1));
    return v;
}

SymbolicValue SymbolicValue::pi_power(int modulus, int s)
{
    SymbolicValue v(modulus);
    v.add(make_term(s, {}), CycloNumber(modulus, 1));
    return v;
}

SymbolicValue SymbolicValue::from_term(int modulus, const Term& t, const CycloNumber& c)
{
    SymbolicValue v(modulus);
    v.add(make_term(t.pi_power, t.atoms), c);
    return v;
}

SymbolicValue SymbolicValue::from_combination(const IndexCombination& comb)
{
    SymbolicValue v(comb.modulus());
    for (const auto& [idx, c] : comb.terms()) v.add(make_term(0, {idx}), c);
    return v;
}

std::optional<int> SymbolicValue::weight() const
{
    if (terms_.empty()) return std::nullopt;
    const int w = terms_.begin()->first.weight();
    for (const auto& [t, c] : terms_)
        if (t.weight() != w) return std::nullopt;
    return w;
}

bool SymbolicValue::is_homogeneous() const
{
    return terms_.empty() || weight().has_value();
}

void SymbolicValue::add(const Term& t, const CycloNumber& c)
{
    if (c.modulus() != modulus_) throw ModulusMismatch(modulus_, c.modulus());
    for (const auto& a : t.atoms)
        if (a.modulus() != modulus_) throw ModulusMismatch(modulus_, a.modulus());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& rhs)
{
    if (rhs.modulus_ != modulus_) throw ModulusMismatch(modulus_, rhs.modulus_);
    for (const auto& [t, c] : rhs.terms_) add(t, c);
    return *this;
}

SymbolicValue& SymbolicValue::operator-=(const SymbolicValue& rhs)
{
    if (rhs.modulus_ != modulus_) throw ModulusMismatch(modulus_, rhs.modulus_);
    for (const auto& [t, c] : rhs.terms_) add(t, -c);
    return *this;
}

SymbolicValue& SymbolicValue::operator*=(const CycloNumber& c)
{
    if (c.modulus() != modulus_) throw ModulusMismatch(modulus_, c.modulus());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

SymbolicValue& SymbolicValue::operator*=(const SymbolicValue& rhs)
{
    *this = *this * rhs;
    return *this;
}

SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b)
{
    if (a.modulus_ != b.modulus_) throw ModulusMismatch(a.modulus_, b.modulus_);
    SymbolicValue out(a.modulus_);
    for (const auto& [ta, ca] : a.terms_) {
        for (const auto& [tb, cb] : b.terms_) {
            std::vector<Index> atoms = ta.atoms;
            atoms.insert(atoms.end(), tb.atoms.begin(), tb.atoms.end());
            std::sort(atoms.begin(), atoms.end());
            out.add(Term{ta.pi_power + tb.pi_power, std::move(atoms)}, ca * cb);
        }
    }
    return out;
}

SymbolicValue SymbolicValue::linearized() const
{
    SymbolicValue out(modulus_);
    for (const auto& [t, c] : terms_) {
        IndexCombination prod(modulus_);
        prod.add(Index(modulus_), CycloNumber(modulus_, 1));
        for (const auto& a : t.atoms) {
            IndexCombination single(modulus_);
            single.add(a, CycloNumber(modulus_, 1));
            prod = stuffle(prod, single);
        }
        for (const auto& [idx, m] : prod.terms()) out.add(make_term(t.pi_power, {idx}), m * c);
    }
    return out;
}

bool SymbolicValue::operator==(const SymbolicValue& rhs) const
{
    return modulus_ == rhs.modulus_ && terms_ == rhs.terms_;
}

std::string SymbolicValue::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << t.to_string();
    }
    return os.str();
}

} // namespace cmzv
