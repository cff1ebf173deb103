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

#ifndef CMZV_REGULARIZATION_HPP
#define CMZV_REGULARIZATION_HPP

#include "cmzv/index.hpp"
#include "cmzv/symbolic.hpp"
#include "cmzv/word_algebra.hpp"

#include <vector>

namespace cmzv {

/// Expansion w = sum_l c_l sh x_1^l of an element of h^1 as a polynomial in
/// x_1 over h^0 (note x_1^{sh l} / l! = x_1^l). Every c_l has support in h^0.
struct RegDecomposition {
    int modulus = 1;
    std::vector<NCPoly> coefficients;

    /// The constant term c_0 (the zero polynomial when absent).
    NCPoly constant_term() const;
    /// sum_l c_l sh x_1^l; equals the decomposed input exactly.
    NCPoly reconstruct() const;
};

/// Decomposition built by peeling trailing x_1 letters one at a time
/// through x_1 sh (v x_1^{L-1}) = L v x_1^L + (terms with fewer trailing x_1).
RegDecomposition shuffle_reg_decompose(const Word& w);
RegDecomposition shuffle_reg_decompose(const NCPoly& p);

/// Regularized constant term of w in h^1 as an h^0 polynomial, through
///   Z(u x_eta x_1^l) = (-1)^l Z((u sh x_1^l) x_eta),  eta != x_1,
/// and Z(x_1^l) = 0.
NCPoly shuffle_reg_word(const Word& w);
NCPoly shuffle_reg(const NCPoly& p);

/// Maps an h^0 polynomial to its combination of admissible atoms.
SymbolicValue words_to_symbolic(const NCPoly& p);

/// zeta^sh(idx) as a combination of admissible atoms.
SymbolicValue shuffle_reg_const(const Index& idx);

/// Harmonic regularization with zeta^*(1;1) = 0, as admissible indices.
IndexCombination stuffle_reg(const Index& idx);
IndexCombination stuffle_reg(const IndexCombination& comb);
SymbolicValue stuffle_reg_const(const Index& idx);
/// Regularized star value: sum of stuffle_reg over all adjacent merges.
SymbolicValue stuffle_reg_star(const Index& idx);

} // namespace cmzv

#endif
