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

#ifndef CMZV_APP_SUITES_HPP
#define CMZV_APP_SUITES_HPP

#include "cmzv/app/config.hpp"
#include "cmzv/app/report.hpp"
#include "cmzv/symmetric_values.hpp"
#include "cmzv/word_algebra.hpp"

#include <vector>

namespace cmzv::app {

/// Words of the given length over x_0, x_1, x_z, ..., x_{z^{N-1}}, with
/// x_0 ordered first.
std::vector<Word> words_of_length(int modulus, int length);

/// Numeric identities pass when the residual is below 10^-(precision - 5);
/// relation-based suites need a bounded relation with residual below
/// 10^-(precision / 2).

/// zeta(xi; 1) against -log(1 - xi) for xi != 1 and N <= max_modulus, to
/// 10^-precision, and the Euler identity 6 zeta(2) + (pi i)^2 = 0.
Report suite_closed_forms(int max_modulus, const AppConfig& cfg);
/// Z(u sh v) = Z(u) Z(v) for h^0 words with |u| + |v| <= max_weight, u <= v.
Report suite_shuffle(int modulus, int max_weight, const AppConfig& cfg);
/// zeta(a) zeta(b) against the harmonic product expansion.
Report suite_stuffle(int modulus, int max_weight, const AppConfig& cfg);
/// Z^sh(u x_eta x_1^l) = (-1)^l Z((u sh x_1^l) x_eta) for eta != x_1, l <= 2,
/// with the left side from the x_1-polynomial decomposition, plus exact
/// reconstruction of every h^1 word.
Report suite_reg_formula(int modulus, int max_weight, const AppConfig& cfg);
Report suite_antipode(int modulus, int max_weight, const AppConfig& cfg, int max_depth = 3);
/// parity_defect(idx) in the span of pd_span_set(N, wt, depth).
Report suite_parity(int modulus, int max_weight, const AppConfig& cfg);
/// S(a) S(b) minus the symmetric values of the terms of a * b is in the
/// span of pi i Z_{w-1}, for every unit alpha.
Report suite_harmonic_closure(int modulus, int max_weight, const AppConfig& cfg);
Report span_report(int modulus, const Alpha& alpha, int weight, const AppConfig& cfg);

} // namespace cmzv::app

#endif
