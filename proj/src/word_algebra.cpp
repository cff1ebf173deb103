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

#include "cmzv/word_algebra.hpp"

#include "cmzv/errors.hpp"

#include <sstream>
#include <utility>

namespace cmzv {

Word::Word(int modulus, std::vector<Letter> letters) : modulus_(modulus), letters_(std::move(letters))
{
    for (const auto& l : letters_)
        if (!l.is_zero() && (l.exponent() < 0 || l.exponent() >= modulus_))
            throw DomainError("Word: root letter exponent out of range");
}

bool Word::in_h1() const
{
    return letters_.empty() || !letters_.front().is_zero();
}

bool Word::in_h0() const
{
    return in_h1() && (letters_.empty() || !letters_.back().is_one());
}

Word Word::operator+(const Word& rhs) const
{
    if (rhs.modulus_ != modulus_) throw ModulusMismatch(modulus_, rhs.modulus_);
    Word out(*this);
    out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return out;
}

Word Word::appended(const Letter& l) const
{
    Word out(*this);
    out.letters_.push_back(l);
    return out;
}

Word Word::prepended(const Letter& l) const
{
    Word out(modulus_);
    out.letters_.reserve(letters_.size() + 1);
    out.letters_.push_back(l);
    out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    return out;
}

Word Word::slice(std::size_t from, std::size_t to) const
{
    Word out(modulus_);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                        letters_.begin() + static_cast<std::ptrdiff_t>(to));
    return out;
}

std::string Word::to_string() const
{
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (const auto& l : letters_) {
        if (l.is_zero()) os << "x0";
        else os << "x[" << l.exponent() << "]";
    }
    return os.str();
}

NCPoly::NCPoly(const Word& w) : NCPoly(w, CycloNumber(w.modulus(), 1)) {}

NCPoly::NCPoly(const Word& w, const CycloNumber& c) : modulus_(w.modulus())
{
    add(w, c);
}

CycloNumber NCPoly::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? CycloNumber(modulus_) : it->second;
}

void NCPoly::add(const Word& w, const CycloNumber& c)
{
    if (w.modulus() != modulus_) throw ModulusMismatch(modulus_, w.modulus());
    if (c.modulus() != modulus_) throw ModulusMismatch(modulus_, c.modulus());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs)
{
    if (rhs.modulus_ != modulus_) throw ModulusMismatch(modulus_, rhs.modulus_);
    for (const auto& [w, c] : rhs.terms_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs)
{
    if (rhs.modulus_ != modulus_) throw ModulusMismatch(modulus_, rhs.modulus_);
    for (const auto& [w, c] : rhs.terms_) add(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const CycloNumber& c)
{
    if (c.modulus() != modulus_) throw ModulusMismatch(modulus_, c.modulus());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

NCPoly NCPoly::appended(const Letter& l) const
{
    NCPoly out(modulus_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.appended(l), c);
    return out;
}

bool NCPoly::support_in_h0() const
{
    for (const auto& [w, c] : terms_)
        if (!w.in_h0()) return false;
    return true;
}

bool NCPoly::support_in_h1() const
{
    for (const auto& [w, c] : terms_)
        if (!w.in_h1()) return false;
    return true;
}

bool NCPoly::operator==(const NCPoly& rhs) const
{
    return modulus_ == rhs.modulus_ && terms_ == rhs.terms_;
}

std::string NCPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << w.to_string();
    }
    return os.str();
}

std::map<Word, std::int64_t> shuffle_words(const Word& u, const Word& v)
{
    if (u.modulus() != v.modulus()) throw ModulusMismatch(u.modulus(), v.modulus());
    const std::size_t p = u.size();
    const std::size_t q = v.size();
    // table[i][j] = shuffle of the suffixes u[i..] and v[j..]
    std::vector<std::vector<std::map<Word, std::int64_t>>> table(p + 1, std::vector<std::map<Word, std::int64_t>>(q + 1));
    for (std::size_t i = p + 1; i-- > 0;) {
        for (std::size_t j = q + 1; j-- > 0;) {
            auto& cell = table[i][j];
            if (i == p) {
                cell.emplace(v.slice(j, q), 1);
                continue;
            }
            if (j == q) {
                cell.emplace(u.slice(i, p), 1);
                continue;
            }
            for (const auto& [w, m] : table[i + 1][j]) cell[w.prepended(u[i])] += m;
            for (const auto& [w, m] : table[i][j + 1]) cell[w.prepended(v[j])] += m;
        }
    }
    return std::move(table[0][0]);
}

NCPoly shuffle(const NCPoly& u, const NCPoly& v)
{
    if (u.modulus() != v.modulus()) throw ModulusMismatch(u.modulus(), v.modulus());
    NCPoly out(u.modulus());
    for (const auto& [wu, cu] : u.terms()) {
        for (const auto& [wv, cv] : v.terms()) {
            const CycloNumber c = cu * cv;
            for (const auto& [w, m] : shuffle_words(wu, wv)) out.add(w, c * Rational(m));
        }
    }
    return out;
}

NCPoly shuffle_power(const Word& w, int n)
{
    NCPoly out(Word(w.modulus()));
    const NCPoly base(w);
    for (int i = 0; i < n; ++i) out = shuffle(out, base);
    return out;
}

Word index_to_word(const Index& idx)
{
    const int n = idx.modulus();
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(idx.weight()));
    for (std::size_t j = 0; j < idx.depth(); ++j) {
        RootOfUnity eta = RootOfUnity::one(n);
        for (std::size_t i = j; i < idx.depth(); ++i) eta = eta * idx.xi(i);
        letters.push_back(Letter::root(eta));
        for (int z = 1; z < idx.k()[j]; ++z) letters.push_back(Letter::zero());
    }
    return Word(n, std::move(letters));
}

Index word_to_index(const Word& w)
{
    if (!w.in_h1()) throw DomainError("word_to_index: word starts with x0 (not in h^1)");
    const int n = w.modulus();
    std::vector<int> k;
    std::vector<int> eta;
    for (const auto& l : w.letters()) {
        if (l.is_zero()) {
            ++k.back();
        } else {
            eta.push_back(l.exponent());
            k.push_back(1);
        }
    }
    std::vector<int> xi(eta.size());
    for (std::size_t j = 0; j < eta.size(); ++j) {
        const int next = j + 1 < eta.size() ? eta[j + 1] : 0;
        xi[j] = eta[j] - next;
    }
    return Index(std::move(k), xi, n);
}

CycloNumber IndexCombination::coefficient(const Index& idx) const
{
    auto it = terms_.find(idx);
    return it == terms_.end() ? CycloNumber(modulus_) : it->second;
}

void IndexCombination::add(const Index& idx, const CycloNumber& c)
{
    if (idx.modulus() != modulus_) throw ModulusMismatch(modulus_, idx.modulus());
    if (c.modulus() != modulus_) throw ModulusMismatch(modulus_, c.modulus());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

IndexCombination& IndexCombination::operator+=(const IndexCombination& rhs)
{
    if (rhs.modulus_ != modulus_) throw ModulusMismatch(modulus_, rhs.modulus_);
    for (const auto& [idx, c] : rhs.terms_) add(idx, c);
    return *this;
}

IndexCombination& IndexCombination::operator*=(const CycloNumber& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, coeff] : terms_) coeff *= c;
    return *this;
}

bool IndexCombination::operator==(const IndexCombination& rhs) const
{
    return modulus_ == rhs.modulus_ && terms_ == rhs.terms_;
}

std::string IndexCombination::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << idx.to_string();
    }
    return os.str();
}

IndexCombination stuffle(const Index& a, const Index& b)
{
    if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
    const int n = a.modulus();
    const std::size_t p = a.depth();
    const std::size_t q = b.depth();
    // table[i][j] = a[0..i) * b[0..j)
    std::vector<std::vector<std::map<Index, std::int64_t>>> table(p + 1, std::vector<std::map<Index, std::int64_t>>(q + 1));
    for (std::size_t i = 0; i <= p; ++i) {
        for (std::size_t j = 0; j <= q; ++j) {
            auto& cell = table[i][j];
            if (i == 0) {
                cell.emplace(b.front(j), 1);
                continue;
            }
            if (j == 0) {
                cell.emplace(a.front(i), 1);
                continue;
            }
            const int ka = a.k()[i - 1];
            const int kb = b.k()[j - 1];
            const RootOfUnity xa = a.xi(i - 1);
            const RootOfUnity xb = b.xi(j - 1);
            for (const auto& [idx, m] : table[i][j - 1]) cell[idx.appended(kb, xb)] += m;
            for (const auto& [idx, m] : table[i - 1][j]) cell[idx.appended(ka, xa)] += m;
            for (const auto& [idx, m] : table[i - 1][j - 1]) cell[idx.appended(ka + kb, xa * xb)] += m;
        }
    }
    IndexCombination out(n);
    for (const auto& [idx, m] : table[p][q]) out.add(idx, CycloNumber(n, Rational(m)));
    return out;
}

IndexCombination stuffle(const IndexCombination& a, const IndexCombination& b)
{
    if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
    IndexCombination out(a.modulus());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            IndexCombination prod = stuffle(ia, ib);
            prod *= ca * cb;
            out += prod;
        }
    }
    return out;
}

IndexCombination star_expand(const Index& idx)
{
    const int n = idx.modulus();
    IndexCombination out(n);
    const std::size_t r = idx.depth();
    if (r <= 1) {
        out.add(idx, CycloNumber(n, 1));
        return out;
    }
    const std::size_t gaps = r - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
        std::vector<int> k{idx.k()[0]};
        std::vector<RootOfUnity> xi{idx.xi(0)};
        for (std::size_t j = 1; j < r; ++j) {
            if (mask & (std::uint64_t{1} << (j - 1))) {
                k.back() += idx.k()[j];
                xi.back() = xi.back() * idx.xi(j);
            } else {
                k.push_back(idx.k()[j]);
                xi.push_back(idx.xi(j));
            }
        }
        out.add(Index(std::move(k), xi), CycloNumber(n, 1));
    }
    return out;
}

Index reverse_conj(const Index& idx)
{
    return reverse(idx).conj();
}

Index reverse(const Index& idx)
{
    std::vector<int> k(idx.k().rbegin(), idx.k().rend());
    std::vector<int> xi(idx.xi_exponents().rbegin(), idx.xi_exponents().rend());
    return Index(std::move(k), xi, idx.modulus());
}

} // namespace cmzv
