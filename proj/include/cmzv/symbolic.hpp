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

#ifndef CMZV_SYMBOLIC_HPP
#define CMZV_SYMBOLIC_HPP

#include "cmzv/cyclotomic.hpp"
#include "cmzv/index.hpp"
#include "cmzv/word_algebra.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmzv {

/// (pi i)^s times a product of admissible CMZV atoms. Atoms are kept sorted,
/// so a Term is a canonical multiset; depth-zero atoms never appear.
struct Term {
    int pi_power = 0;
    std::vector<Index> atoms;

    int weight() const;
    std::string to_string() const;

    auto operator<=>(const Term&) const = default;
};

Term make_term(int pi_power, std::vector<Index> atoms);

/// K_N-linear combination of Terms: an exact element of Q(zeta_N)[pi i]
/// adjoined with CMZVs, kept unevaluated.
class SymbolicValue {
public:
    explicit SymbolicValue(int modulus = 1) : modulus_(modulus) {}

    static SymbolicValue one(int modulus);
    static SymbolicValue constant(const CycloNumber& c);
    /// Single admissible atom; a depth-0 index gives one().
    static SymbolicValue atom(const Index& idx);
    static SymbolicValue pi_power(int modulus, int s);
    static SymbolicValue from_term(int modulus, const Term& t, const CycloNumber& c);
    /// Every index in the combination must be admissible.
    static SymbolicValue from_combination(const IndexCombination& comb);

    int modulus() const { return modulus_; }
    const std::map<Term, CycloNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Weight when all terms share one, nullopt for zero or inhomogeneous values.
    std::optional<int> weight() const;
    bool is_homogeneous() const;

    void add(const Term& t, const CycloNumber& c);
    SymbolicValue& operator+=(const SymbolicValue& rhs);
    SymbolicValue& operator-=(const SymbolicValue& rhs);
    SymbolicValue& operator*=(const CycloNumber& c);
    SymbolicValue& operator*=(const SymbolicValue& rhs);

    friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
    friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a -= b; }
    friend SymbolicValue operator*(SymbolicValue a, const CycloNumber& c) { return a *= c; }
    friend SymbolicValue operator*(const CycloNumber& c, SymbolicValue a) { return a *= c; }
    friend SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b);

    /// Rewrites every product of atoms as a linear combination of single atoms
    /// through the harmonic product; exact.
    SymbolicValue linearized() const;

    bool operator==(const SymbolicValue& rhs) const;
    std::string to_string() const;

private:
    int modulus_;
    std::map<Term, CycloNumber> terms_;
};

} // namespace cmzv

#endif
