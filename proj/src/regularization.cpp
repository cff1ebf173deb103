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

#include "cmzv/regularization.hpp"

#include "cmzv/errors.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace cmzv {

namespace {

std::size_t trailing_ones(const Word& w)
{
    std::size_t n = 0;
    while (n < w.size() && w[w.size() - 1 - n].is_one()) ++n;
    return n;
}

Word ones(int modulus, std::size_t count)
{
    return Word(modulus, std::vector<Letter>(count, Letter::root_exponent(0)));
}

void accumulate(std::vector<NCPoly>& into, const std::vector<NCPoly>& from, const CycloNumber& scale,
                int modulus)
{
    if (into.size() < from.size()) into.resize(from.size(), NCPoly(modulus));
    for (std::size_t l = 0; l < from.size(); ++l) into[l] += from[l] * scale;
}

class DecompositionTable {
public:
    const std::vector<NCPoly>& get(const Word& w)
    {
        if (auto it = table_.find(w); it != table_.end()) return it->second;
        auto value = compute(w);
        return table_.emplace(w, std::move(value)).first->second;
    }

private:
    std::vector<NCPoly> compute(const Word& w)
    {
        const int n = w.modulus();
        if (w.in_h0()) return {NCPoly(w)};
        const std::size_t L = trailing_ones(w);
        const std::size_t head = w.size() - L;
        if (head == 0) {
            std::vector<NCPoly> out(L + 1, NCPoly(n));
            out[L] = NCPoly(Word(n));
            return out;
        }
        const Word prefix = w.slice(0, head);
        const Word tail = ones(n, L - 1);
        // x_1 sh (prefix x_1^{L-1}) = L * w + sum over insertions inside prefix
        std::vector<NCPoly> out;
        const auto& lower = get(prefix + tail);
        std::vector<NCPoly> shifted(lower.size() + 1, NCPoly(n));
        for (std::size_t l = 0; l < lower.size(); ++l)
            shifted[l + 1] = lower[l] * CycloNumber(n, static_cast<long>(l + 1));
        accumulate(out, shifted, CycloNumber(n, 1), n);
        for (std::size_t p = 0; p < head; ++p) {
            std::vector<Letter> letters = prefix.letters();
            letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(p), Letter::root_exponent(0));
            const Word other = Word(n, std::move(letters)) + tail;
            const auto& dec = get(other);
            accumulate(out, dec, CycloNumber(n, -1), n);
        }
        const CycloNumber inv_l(n, Rational(1, static_cast<long>(L)));
        for (auto& c : out) c *= inv_l;
        while (out.size() > 1 && out.back().is_zero()) out.pop_back();
        return out;
    }

    std::map<Word, std::vector<NCPoly>> table_;
};

} // namespace

NCPoly RegDecomposition::constant_term() const
{
    return coefficients.empty() ? NCPoly(modulus) : coefficients.front();
}

NCPoly RegDecomposition::reconstruct() const
{
    NCPoly out(modulus);
    for (std::size_t l = 0; l < coefficients.size(); ++l)
        out += shuffle(coefficients[l], NCPoly(ones(modulus, l)));
    return out;
}

RegDecomposition shuffle_reg_decompose(const Word& w)
{
    return shuffle_reg_decompose(NCPoly(w));
}

RegDecomposition shuffle_reg_decompose(const NCPoly& p)
{
    if (!p.support_in_h1()) throw DomainError("shuffle_reg_decompose: input not in h^1");
    DecompositionTable table;
    RegDecomposition out{p.modulus(), {}};
    for (const auto& [w, c] : p.terms()) accumulate(out.coefficients, table.get(w), c, p.modulus());
    while (!out.coefficients.empty() && out.coefficients.back().is_zero()) out.coefficients.pop_back();
    return out;
}

NCPoly shuffle_reg_word(const Word& w)
{
    if (!w.in_h1()) throw DomainError("shuffle_reg_word: word not in h^1");
    const int n = w.modulus();
    if (w.in_h0()) return NCPoly(w);
    const std::size_t L = trailing_ones(w);
    if (L == w.size()) return NCPoly(n);
    const std::size_t eta_pos = w.size() - L - 1;
    const Word u = w.slice(0, eta_pos);
    NCPoly out = shuffle(NCPoly(u), NCPoly(ones(n, L))).appended(w[eta_pos]);
    if (L % 2 == 1) out *= CycloNumber(n, -1);
    return out;
}

NCPoly shuffle_reg(const NCPoly& p)
{
    NCPoly out(p.modulus());
    for (const auto& [w, c] : p.terms()) out += shuffle_reg_word(w) * c;
    return out;
}

SymbolicValue words_to_symbolic(const NCPoly& p)
{
    SymbolicValue out(p.modulus());
    for (const auto& [w, c] : p.terms()) {
        if (!w.in_h0()) throw DomainError("words_to_symbolic: word not in h^0: " + w.to_string());
        out += SymbolicValue::atom(word_to_index(w)) * c;
    }
    return out;
}

SymbolicValue shuffle_reg_const(const Index& idx)
{
    if (idx.is_admissible()) return SymbolicValue::atom(idx);
    return words_to_symbolic(shuffle_reg_word(index_to_word(idx)));
}

namespace {

std::size_t trailing_unit_entries(const Index& idx)
{
    std::size_t n = 0;
    const std::size_t r = idx.depth();
    while (n < r && idx.k()[r - 1 - n] == 1 && idx.xi_exponents()[r - 1 - n] == 0) ++n;
    return n;
}

class StuffleRegTable {
public:
    const IndexCombination& get(const Index& idx)
    {
        std::lock_guard lock(mutex_);
        return get_locked(idx);
    }

private:
    const IndexCombination& get_locked(const Index& idx)
    {
        if (auto it = table_.find(idx); it != table_.end()) return it->second;
        auto value = compute(idx);
        return table_.emplace(idx, std::move(value)).first->second;
    }

    IndexCombination compute(const Index& idx)
    {
        const int n = idx.modulus();
        IndexCombination out(n);
        if (idx.is_admissible()) {
            out.add(idx, CycloNumber(n, 1));
            return out;
        }
        const std::size_t L = trailing_unit_entries(idx);
        const Index u = idx.front(idx.depth() - 1);
        const Index z = Index({1}, std::vector<int>{0}, n);
        // u * z = L * idx + (terms with fewer trailing (1;1)); reg(z) = 0.
        IndexCombination others = stuffle(u, z);
        others.add(idx, CycloNumber(n, -static_cast<long>(L)));
        const CycloNumber scale(n, Rational(-1, static_cast<long>(L)));
        for (const auto& [t, c] : others.terms()) {
            IndexCombination part = get_locked(t);
            part *= c * scale;
            out += part;
        }
        return out;
    }

    std::mutex mutex_;
    std::map<Index, IndexCombination> table_;
};

StuffleRegTable& stuffle_table()
{
    static StuffleRegTable table;
    return table;
}

} // namespace

IndexCombination stuffle_reg(const Index& idx)
{
    return stuffle_table().get(idx);
}

IndexCombination stuffle_reg(const IndexCombination& comb)
{
    IndexCombination out(comb.modulus());
    for (const auto& [idx, c] : comb.terms()) {
        IndexCombination part = stuffle_reg(idx);
        part *= c;
        out += part;
    }
    return out;
}

SymbolicValue stuffle_reg_const(const Index& idx)
{
    return SymbolicValue::from_combination(stuffle_reg(idx));
}

SymbolicValue stuffle_reg_star(const Index& idx)
{
    return SymbolicValue::from_combination(stuffle_reg(star_expand(idx)));
}

} // namespace cmzv
