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

#ifndef CMZV_SYMMETRIC_VALUES_HPP
#define CMZV_SYMMETRIC_VALUES_HPP

#include "cmzv/index.hpp"
#include "cmzv/symbolic.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cmzv {

/// Twist exponent alpha in Z/NZ.
class Alpha {
public:
    Alpha(long value, int modulus);

    int value() const { return value_; }
    int modulus() const { return modulus_; }
    /// gcd(alpha, N) = 1; for N = 1 the only residue is a unit.
    bool is_unit() const;

    auto operator<=>(const Alpha&) const = default;

private:
    int value_;
    int modulus_;
};

/// Shuffle-regularized symmetric value
///   sum_{j=0}^r (xi_{j+1}...xi_r)^alpha (-1)^{k_{j+1}+...+k_r}
///       zeta^sh(xi_1..xi_j; k_1..k_j) zeta^sh(conj xi_r..conj xi_{j+1}; k_r..k_{j+1}).
SymbolicValue csmzv_sh_expand(const Index& idx, const Alpha& alpha);

/// Harmonic-regularized symmetric value: the same sum with zeta^* (T = 0)
/// on both factors.
SymbolicValue csmzv_st_expand(const Index& idx, const Alpha& alpha);

/// zeta^sh(xi; k) - (-1)^{w-r} zeta^sh(conj xi; k).
SymbolicValue parity_defect(const Index& idx);

/// sum_{j=0}^r (-1)^{r-j} zeta^*(xi_1..xi_j; k_1..k_j) zeta^{*,star}(xi_r..xi_{j+1}; k_r..k_{j+1}),
/// which vanishes identically.
SymbolicValue antipode_sum(const Index& idx);

/// Terms (pi i)^s zeta(idx) with wt(idx) + s = weight and depth(idx) <= max_depth,
/// ordered canonically.
std::vector<Term> weighted_terms(int modulus, int weight, std::size_t max_depth);

/// Spanning set of PD_{w,r} + pi i Z_{w-1,r}: lower-depth terms, products of
/// two lower-weight terms with r_1 + r_2 <= r, and pi i times weight w-1 terms.
struct PDSpanSet {
    int modulus = 1;
    int weight = 0;
    int depth = 0;
    std::vector<Term> generators;

    std::vector<SymbolicValue> values() const;
};

PDSpanSet pd_span_set(int modulus, int weight, int depth, std::size_t cap = 20000);

/// pi i times every term of weight w-1 (any depth up to w-1).
std::vector<Term> pi_shifted_terms(int modulus, int weight);

} // namespace cmzv

#endif
