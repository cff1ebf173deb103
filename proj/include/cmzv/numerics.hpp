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

#ifndef CMZV_NUMERICS_HPP
#define CMZV_NUMERICS_HPP

#include "cmzv/bigcomplex.hpp"
#include "cmzv/cyclotomic.hpp"
#include "cmzv/index.hpp"
#include "cmzv/symbolic.hpp"
#include "cmzv/word_algebra.hpp"

#include <map>
#include <mutex>

namespace cmzv {

struct EvalConfig {
    /// Target number of correct decimal digits.
    int precision = 40;
    /// Cutoff on series terms; evaluation fails rather than truncating early.
    long max_terms = 100000;
    /// Tail-acceleration depth of the direct nested summation.
    int accel_order = 6;

    /// Throws DomainError unless precision >= 10, max_terms >= 100, accel_order >= 0.
    void validate() const;
};

/// Internal digits used to reach cfg.precision.
int working_digits(const EvalConfig& cfg);

/// zeta_N -> e^{2 pi i / N}, accurate to 10^{-precision}.
BigComplex cyclo_embed(const CycloNumber& a, int precision);
BigComplex root_embed(const RootOfUnity& xi, int precision);

BigComplex pi_i(const EvalConfig& cfg);

/// -log(1 - xi) on the principal branch; xi = 1 throws DomainError.
BigComplex eval_weight1_closed(const RootOfUnity& xi, const EvalConfig& cfg);

/// Iterated integral Z(w) for w in h^0, with letters x_0 -> dt/t and
/// x_eta -> dt/(eta^{-1} - t). The path [0,1] is split at 1/2 and the upper
/// half is mapped back by t -> 1 - t, so every piece is a power series with
/// ratio at most 1/2 for N <= 6.
BigComplex eval_word(const Word& w, const EvalConfig& cfg);

/// Admissible CMZV; depth 0 gives exactly 1. Throws DomainError on
/// non-admissible input and PrecisionUnreachable when max_terms is too small.
BigComplex eval_cmzv(const Index& idx, const EvalConfig& cfg);

/// Straight nested summation over 0 < m_1 < ... < m_r <= max_terms with
/// accel_order rounds of period-N averaging and an Euler-Maclaurin tail on
/// xi_r = 1 levels. err is 10x the change from a half-length run. Meant as
/// an independent low-precision cross-check.
BigComplex eval_cmzv_direct(const Index& idx, const EvalConfig& cfg);

/// Memoizing evaluator over a fixed configuration.
class Evaluator {
public:
    explicit Evaluator(EvalConfig cfg);

    const EvalConfig& config() const { return cfg_; }

    BigComplex cmzv(const Index& idx);
    BigComplex word(const Word& w);
    BigComplex ncpoly(const NCPoly& p);
    BigComplex symbolic(const SymbolicValue& v);
    BigComplex constant(const CycloNumber& c);
    BigComplex pi_i_power(int s);

    std::size_t cached_values() const;

private:
    EvalConfig cfg_;
    mutable std::mutex mutex_;
    std::map<Index, BigComplex> values_;
};

BigComplex eval_symbolic(const SymbolicValue& v, const EvalConfig& cfg);

} // namespace cmzv

#endif
