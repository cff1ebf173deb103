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

#ifndef CMZV_WORD_ALGEBRA_HPP
#define CMZV_WORD_ALGEBRA_HPP

#include "cmzv/cyclotomic.hpp"
#include "cmzv/index.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cmzv {

/// A letter x_0 or x_xi of the alphabet for the word algebra.
class Letter {
public:
    static Letter zero() { return Letter(-1); }
    static Letter root(const RootOfUnity& xi) { return Letter(xi.exponent()); }
    /// Root letter given by its exponent (already reduced mod N).
    static Letter root_exponent(int e) { return Letter(e); }

    bool is_zero() const { return code_ < 0; }
    /// x_1, the letter responsible for divergence at the upper endpoint.
    bool is_one() const { return code_ == 0; }
    int exponent() const { return code_; }

    auto operator<=>(const Letter&) const = default;

private:
    explicit Letter(int code) : code_(code) {}
    int code_;
};

/// A word in the letters {x_0} u {x_xi}; the empty word is the unit.
class Word {
public:
    explicit Word(int modulus = 1) : modulus_(modulus) {}
    Word(int modulus, std::vector<Letter> letters);

    int modulus() const { return modulus_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    /// Empty, or starts with a root letter.
    bool in_h1() const;
    /// In h^1 and does not end with x_1.
    bool in_h0() const;

    Word operator+(const Word& rhs) const;
    Word appended(const Letter& l) const;
    Word prepended(const Letter& l) const;
    Word slice(std::size_t from, std::size_t to) const;

    /// e.g. "x[1]x[3]x0", empty word renders as "1".
    std::string to_string() const;

    auto operator<=>(const Word&) const = default;

private:
    int modulus_;
    std::vector<Letter> letters_;
};

/// Finite K_N-linear combination of words. Zero coefficients are never stored.
class NCPoly {
public:
    explicit NCPoly(int modulus = 1) : modulus_(modulus) {}
    NCPoly(const Word& w);
    NCPoly(const Word& w, const CycloNumber& c);

    int modulus() const { return modulus_; }
    const std::map<Word, CycloNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of w (zero when absent).
    CycloNumber coefficient(const Word& w) const;

    void add(const Word& w, const CycloNumber& c);

    NCPoly& operator+=(const NCPoly& rhs);
    NCPoly& operator-=(const NCPoly& rhs);
    NCPoly& operator*=(const CycloNumber& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const CycloNumber& c) { return a *= c; }

    /// Right concatenation by a letter on every word.
    NCPoly appended(const Letter& l) const;

    bool support_in_h0() const;
    bool support_in_h1() const;

    bool operator==(const NCPoly& rhs) const;
    std::string to_string() const;

private:
    int modulus_;
    std::map<Word, CycloNumber> terms_;
};

/// Shuffle of two words with integer multiplicities.
std::map<Word, std::int64_t> shuffle_words(const Word& u, const Word& v);
NCPoly shuffle(const NCPoly& u, const NCPoly& v);
/// x^{sh n} for a single word.
NCPoly shuffle_power(const Word& w, int n);

/// Block j is x_{xi_j ... xi_r} followed by k_j - 1 copies of x_0.
Word index_to_word(const Index& idx);
/// Inverse of index_to_word on h^1; throws DomainError on words starting with x_0.
Index word_to_index(const Word& w);

/// Finite K_N-linear combination of indices.
class IndexCombination {
public:
    explicit IndexCombination(int modulus = 1) : modulus_(modulus) {}

    int modulus() const { return modulus_; }
    const std::map<Index, CycloNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CycloNumber coefficient(const Index& idx) const;

    void add(const Index& idx, const CycloNumber& c);
    IndexCombination& operator+=(const IndexCombination& rhs);
    IndexCombination& operator*=(const CycloNumber& c);

    bool operator==(const IndexCombination& rhs) const;
    std::string to_string() const;

private:
    int modulus_;
    std::map<Index, CycloNumber> terms_;
};

/// Harmonic (quasi-shuffle) product, recursing on the outermost entries:
///   (A,z) * (B,z') = ((A,z) * B) z' + (A * (B,z')) z + (A * B)(z o z'),
/// with z_{k,xi} o z_{k',xi'} = z_{k+k', xi xi'}. For depth one,
///   (1;a) * (1;b) = (1,1;a,b) + (1,1;b,a) + (2;ab).
IndexCombination stuffle(const Index& a, const Index& b);
IndexCombination stuffle(const IndexCombination& a, const IndexCombination& b);

/// Star value expansion: sum over all merges of adjacent entries.
IndexCombination star_expand(const Index& idx);

/// Reverses k and reverses-and-conjugates xi.
Index reverse_conj(const Index& idx);
/// Reverses k and xi without conjugation.
Index reverse(const Index& idx);

} // namespace cmzv

#endif
