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

#include "cmzv/errors.hpp"
#include "cmzv/numerics.hpp"
#include "cmzv/regularization.hpp"
#include "cmzv/relations.hpp"
#include "cmzv/symmetric_values.hpp"
#include "cmzv/word_algebra.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cmzv;
using namespace cmzv::testing;

namespace {

SymbolicValue A(const Index& i)
{
    return SymbolicValue::atom(i);
}

SymbolicValue pi_power(int n, int s)
{
    return SymbolicValue::pi_power(n, s);
}

std::vector<SymbolicValue> to_values(int n, const std::vector<Term>& terms)
{
    std::vector<SymbolicValue> out;
    for (const auto& t : terms) out.push_back(SymbolicValue::from_term(n, t, CycloNumber(n, 1)));
    return out;
}

CongruenceOptions options(int precision = 60)
{
    CongruenceOptions opt;
    opt.eval.precision = precision;
    return opt;
}

} // namespace

TEST(AlphaTest, ReductionAndUnits)
{
    EXPECT_EQ(Alpha(7, 3).value(), 1);
    EXPECT_EQ(Alpha(-1, 4).value(), 3);
    EXPECT_TRUE(Alpha(0, 1).is_unit());
    EXPECT_FALSE(Alpha(0, 3).is_unit());
    EXPECT_FALSE(Alpha(2, 4).is_unit());
    EXPECT_TRUE(Alpha(3, 4).is_unit());
}

TEST(Csmzv, EmptyIndexIsOne)
{
    EXPECT_EQ(csmzv_sh_expand(Index(3), Alpha(1, 3)), SymbolicValue::one(3));
    EXPECT_EQ(csmzv_st_expand(Index(3), Alpha(1, 3)), SymbolicValue::one(3));
}

TEST(Csmzv, DepthOne)
{
    // zeta(xi; k) + (-1)^k xi^alpha zeta(conj xi; k)
    for (int n : {2, 3, 4, 6}) {
        for (int a = 0; a < n; ++a) {
            for (int e = 0; e < n; ++e) {
                for (int k = 1; k <= 3; ++k) {
                    const Index i = idx({k}, {e}, n);
                    if (!i.is_admissible()) continue;
                    CycloNumber c = CycloNumber::root(RootOfUnity(static_cast<std::int64_t>(e) * a, n));
                    if (k % 2 == 1) c = -c;
                    const SymbolicValue expect = A(i) + A(i.conj()) * c;
                    EXPECT_EQ(csmzv_sh_expand(i, Alpha(a, n)), expect);
                    EXPECT_EQ(csmzv_st_expand(i, Alpha(a, n)), expect);
                }
            }
        }
    }
}

TEST(Csmzv, TrivialWeightOneVanishes)
{
    EXPECT_TRUE(csmzv_sh_expand(idx({1}, {0}, 1), Alpha(0, 1)).is_zero());
}

TEST(Csmzv, AlphaOnlyMattersModN)
{
    for (const auto& i : indices_of_weight(3, 3, 3)) EXPECT_EQ(csmzv_sh_expand(i, Alpha(1, 3)), csmzv_sh_expand(i, Alpha(4, 3)));
}

TEST(Csmzv, WeightHomogeneous)
{
    for (const auto& i : indices_of_weight(2, 3, 3)) {
        const SymbolicValue v = csmzv_sh_expand(i, Alpha(1, 2));
        if (!v.is_zero()) EXPECT_EQ(v.weight(), 3) << i.to_string();
    }
}

TEST(Csmzv, NegativeOneValue)
{
    EvalConfig cfg;
    WorkingPrecision guard(60);
    const BigComplex v = eval_symbolic(csmzv_sh_expand(idx({1}, {1}, 2), Alpha(1, 2)), cfg);
    EXPECT_LT(distance(v, "-1.38629436111989061883446424291635313615100026872051"), pow10_neg(40));
}

TEST(Csmzv, HarmonicAndShuffleVersionsAgreeModuloPiI)
{
    const CongruenceOptions opt = options();
    for (int n : {1, 2, 3}) {
        for (int w = 1; w <= 3; ++w) {
            const auto gens = to_values(n, pi_shifted_terms(n, w));
            for (const auto& i : indices_of_weight(n, w, static_cast<std::size_t>(w))) {
                const Alpha alpha(1, n);
                const SymbolicValue d = csmzv_st_expand(i, alpha) - csmzv_sh_expand(i, alpha);
                EXPECT_TRUE(congruence_witness(d, gens, opt).has_value()) << i.to_string();
            }
        }
    }
}

TEST(Csmzv, DepthTwoNegativeOneExample)
{
    const Index i = idx({1, 1}, {1, 1}, 2);
    const Alpha alpha(1, 2);
    const SymbolicValue d = csmzv_st_expand(i, alpha) - csmzv_sh_expand(i, alpha);
    const auto w = congruence_witness(d, to_values(2, pi_shifted_terms(2, 2)), options());
    ASSERT_TRUE(w.has_value());
    EXPECT_LT(w->residual, pow10_neg(30));
}

TEST(Csmzv, StarOnReversedFactorBreaksTheCongruence)
{
    // Putting zeta^{*,star} on the reversed factor changes the N = 1 value of
    // (1, 2) by -zeta(1, 2) = -zeta(3), which is not a multiple of pi i.
    const Index i = idx({1, 2}, {0, 0}, 1);
    SymbolicValue star(1);
    for (std::size_t j = 0; j <= i.depth(); ++j) {
        int w = 0;
        for (std::size_t t = j; t < i.depth(); ++t) w += i.k()[t];
        SymbolicValue term = stuffle_reg_const(i.front(j)) * stuffle_reg_star(reverse_conj(i.back(j)));
        if (w % 2 == 1) term *= CycloNumber(1, -1);
        star += term;
    }
    const SymbolicValue d = star - csmzv_sh_expand(i, Alpha(0, 1));
    EXPECT_FALSE(congruence_witness(d, to_values(1, pi_shifted_terms(1, 3)), options()).has_value());
}

TEST(Csmzv, AlphaZeroDepthOneIsImaginaryMultipleOfPi)
{
    EvalConfig cfg;
    cfg.precision = 60;
    WorkingPrecision guard(80);
    for (int n : {3, 4, 5, 6}) {
        for (int e = 1; e < n; ++e) {
            const SymbolicValue s = csmzv_sh_expand(idx({1}, {e}, n), Alpha(0, n));
            RelationProblem p;
            p.modulus = 1;
            p.values = {eval_symbolic(s, cfg), pi_i(cfg)};
            p.coeff_bound = 1000;
            p.required = 0;
            EXPECT_TRUE(find_relation(p).has_value()) << n << " " << e;
        }
    }
}

TEST(Csmzv, UnitAlphaDepthOneIsNotMultipleOfPi)
{
    EvalConfig cfg;
    cfg.precision = 60;
    WorkingPrecision guard(80);
    for (int n : {3, 4, 5}) {
        for (int e = 1; e < n; ++e) {
            const SymbolicValue s = csmzv_sh_expand(idx({1}, {e}, n), Alpha(1, n));
            RelationProblem p;
            p.modulus = n;
            p.values = {eval_symbolic(s, cfg), pi_i(cfg)};
            p.precision = std::max(60, 20 + 10 * 2 * euler_phi(n));
            p.required = 0;
            EvalConfig hi = cfg;
            hi.precision = p.precision;
            p.values = {eval_symbolic(s, hi), pi_i(hi)};
            EXPECT_FALSE(find_relation(p).has_value()) << n << " " << e;
        }
    }
}

TEST(Parity, Examples)
{
    // Self-conjugate N = 1: zero when w - r is even, double otherwise.
    EXPECT_TRUE(parity_defect(idx({2, 2}, {0, 0}, 1)).is_zero());
    EXPECT_EQ(parity_defect(idx({1, 2}, {0, 0}, 1)), A(idx({1, 2}, {0, 0}, 1)) * CycloNumber(1, 2));
    EXPECT_EQ(parity_defect(idx({2}, {1}, 2)), A(idx({2}, {1}, 2)) * CycloNumber(2, 2));
    EXPECT_EQ(parity_defect(idx({2}, {1}, 3)), A(idx({2}, {1}, 3)) + A(idx({2}, {2}, 3)));
    EvalConfig cfg;
    WorkingPrecision guard(60);
    const BigComplex v = eval_symbolic(parity_defect(idx({2}, {1}, 3)), cfg);
    EXPECT_LT(boost::multiprecision::abs(v.im), pow10_neg(40));
}

TEST(Parity, NegativeOneWeightTwoIsPiSquaredOverSix)
{
    const auto w = congruence_witness(parity_defect(idx({2}, {1}, 2)), {pi_power(2, 2)}, options());
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(w->coefficients.size(), 1u);
    EXPECT_EQ(w->coefficients[0], CycloNumber(2, Rational(1, 6)));
}

TEST(Antipode, DepthOneIsExactlyZero)
{
    for (const auto& i : indices_of_weight(3, 3, 1)) EXPECT_TRUE(antipode_sum(i).linearized().is_zero()) << i.to_string();
}

TEST(Antipode, Examples)
{
    EvalConfig cfg;
    WorkingPrecision guard(60);
    EXPECT_LT(eval_symbolic(antipode_sum(idx({1, 1}, {1, 1}, 2)), cfg).abs(), pow10_neg(35));
    EXPECT_LT(eval_symbolic(antipode_sum(idx({1, 2}, {1, 1}, 3)), cfg).abs(), pow10_neg(35));
    EXPECT_TRUE(antipode_sum(idx({1, 2}, {1, 1}, 3)).linearized().is_zero());
}

TEST(PdSpan, Examples)
{
    const PDSpanSet a = pd_span_set(1, 2, 1);
    EXPECT_EQ(a.generators, (std::vector<Term>{make_term(2, {})}));

    const PDSpanSet b = pd_span_set(2, 2, 1);
    std::set<Term> eb{make_term(2, {}), make_term(1, {idx({1}, {1}, 2)})};
    EXPECT_EQ(std::set<Term>(b.generators.begin(), b.generators.end()), eb);

    const PDSpanSet c = pd_span_set(2, 2, 2);
    std::set<Term> ec = eb;
    ec.insert(make_term(0, {idx({2}, {0}, 2)}));
    ec.insert(make_term(0, {idx({2}, {1}, 2)}));
    ec.insert(make_term(0, {idx({1}, {1}, 2), idx({1}, {1}, 2)}));
    EXPECT_EQ(std::set<Term>(c.generators.begin(), c.generators.end()), ec);
}

TEST(PdSpan, GeneratorsHaveTheRightWeightAndAreSorted)
{
    const PDSpanSet s = pd_span_set(3, 3, 2);
    for (const auto& t : s.generators) EXPECT_EQ(t.weight(), 3);
    EXPECT_TRUE(std::is_sorted(s.generators.begin(), s.generators.end()));
    EXPECT_EQ(std::set<Term>(s.generators.begin(), s.generators.end()).size(), s.generators.size());
}

TEST(PdSpan, CapAndDomain)
{
    EXPECT_THROW(pd_span_set(4, 3, 3, 5), EnumerationCapExceeded);
    EXPECT_THROW(pd_span_set(2, 0, 1), DomainError);
}

TEST(PdSpan, NonvanishingProductStepCongruence)
{
    // For xi_1...xi_r != 1 the symmetric value minus (1 - (xi_1...xi_r)^alpha) zeta^sh(idx)
    // lies in PD + pi i Z.
    CongruenceOptions opt = options();
    for (int n : {2, 3}) {
        for (int w = 1; w <= 2; ++w) {
            for (const auto& i : indices_of_weight(n, w, static_cast<std::size_t>(w))) {
                if (i.xi_product().is_one()) continue;
                const Alpha alpha(1, n);
                const CycloNumber factor = CycloNumber(n, 1) - CycloNumber::root(i.xi_product().pow(alpha.value()));
                const SymbolicValue target = csmzv_sh_expand(i, alpha) - shuffle_reg_const(i) * factor;
                const auto gens = pd_span_set(n, w, static_cast<int>(i.depth())).values();
                EXPECT_TRUE(congruence_witness(target, gens, opt).has_value()) << i.to_string();
            }
        }
    }
}
