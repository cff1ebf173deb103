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
#include "cmzv/word_algebra.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <memory>

using namespace cmzv;
using namespace cmzv::testing;

namespace {

// Reference constants computed independently with mpmath at 70 digits.
const char* zeta2 = "1.64493406684822643647241516664602518921894990120679843773556";
const char* zeta3 = "1.20205690315959428539973816151144999076498629234049888179227";
const char* log_two = "0.69314718055994530941723212145817656807550013436025525412068";
const char* half_log2_sq = "0.240226506959100712333551263163332485865276475797272793433432";
const char* catalan = "0.915965594177219015054603514932384110774149374281672134266498";
const char* pi = "3.14159265358979323846264338327950288419716939937510582097494";
const char* zeta22 = "0.811742425283353643637002772405875927081063213939045180762232";
const char* zeta13 = "0.270580808427784547879000924135291975693687737979681726920744";
const char* alt_pair = "-0.582240526465012505902656320159680108744198474806126425434347";
const char* li3_z3_re = "-0.53424751251537523795543918289397777367332724104022172524101";
const char* li3_z3_im = "0.765587078525921485814230001656824572894451569528027350472705";
const char* li2_z6_re = "0.274155677808037739412069194441004198203158316867799739622593";
const char* li2_z6_im = "1.01494160640965362502120255427452028594168930753029979201749";

class Numerics : public ::testing::Test {
protected:
    EvalConfig cfg;
    std::unique_ptr<WorkingPrecision> guard;

    void SetUp() override { guard = std::make_unique<WorkingPrecision>(90); }

    Real tol() const { return pow10_neg(cfg.precision); }
};

} // namespace

TEST_F(Numerics, KnownValues)
{
    EXPECT_LT(distance(eval_cmzv(idx({2}, {0}, 1), cfg), zeta2), tol());
    EXPECT_LT(distance(eval_cmzv(idx({3}, {0}, 1), cfg), zeta3), tol());
    EXPECT_LT(distance(eval_cmzv(idx({1}, {1}, 2), cfg), std::string("-") + log_two), tol());
    EXPECT_LT(distance(eval_cmzv(idx({1, 1}, {0, 1}, 2), cfg), half_log2_sq), tol());
    EXPECT_LT(distance(eval_cmzv(idx({1, 2}, {0, 0}, 1), cfg), zeta3), tol());
    EXPECT_LT(distance(eval_cmzv(idx({2, 2}, {0, 0}, 1), cfg), zeta22), tol());
    EXPECT_LT(distance(eval_cmzv(idx({1, 3}, {0, 0}, 1), cfg), zeta13), tol());
    EXPECT_LT(distance(eval_cmzv(idx({1, 1}, {1, 1}, 2), cfg), alt_pair), tol());
    EXPECT_LT(distance(eval_cmzv(idx({3}, {1}, 3), cfg), li3_z3_re, li3_z3_im), tol());
    EXPECT_LT(distance(eval_cmzv(idx({2}, {1}, 6), cfg), li2_z6_re, li2_z6_im), tol());
    // Li_2(i) = -pi^2/48 + i G
    const BigComplex li2i = eval_cmzv(idx({2}, {1}, 4), cfg);
    const Real p(pi);
    EXPECT_LT(boost::multiprecision::abs(li2i.re + p * p / 48), tol());
    EXPECT_LT(boost::multiprecision::abs(li2i.im - Real(catalan)), tol());
    // zeta(-1; 2) = -pi^2 / 12
    EXPECT_LT(boost::multiprecision::abs(eval_cmzv(idx({2}, {1}, 2), cfg).re + p * p / 12), tol());
}

TEST_F(Numerics, DepthZeroIsOne)
{
    const BigComplex one = eval_cmzv(Index(5), cfg);
    EXPECT_EQ(one.re, 1);
    EXPECT_EQ(one.im, 0);
    EXPECT_EQ(one.err, 0);
}

TEST_F(Numerics, NonAdmissibleRejected)
{
    EXPECT_THROW(eval_cmzv(idx({2, 1}, {1, 0}, 3), cfg), DomainError);
    EXPECT_THROW(eval_weight1_closed(RootOfUnity(0, 3), cfg), DomainError);
}

TEST_F(Numerics, WeightOneClosedForm)
{
    const BigComplex m = eval_weight1_closed(RootOfUnity(1, 2), cfg);
    EXPECT_LT(distance(m, std::string("-") + log_two), tol());
    // |1 - zeta_6| = 1, so the value is i pi / 3.
    const BigComplex s = eval_weight1_closed(RootOfUnity(1, 6), cfg);
    EXPECT_LT(boost::multiprecision::abs(s.re), tol());
    EXPECT_LT(boost::multiprecision::abs(s.im - Real(pi) / 3), tol());
    // arg(1 - i) = -pi/4
    const BigComplex q = eval_weight1_closed(RootOfUnity(1, 4), cfg);
    EXPECT_LT(boost::multiprecision::abs(q.re + Real(log_two) / 2), tol());
    EXPECT_LT(boost::multiprecision::abs(q.im - Real(pi) / 4), tol());
    for (int n = 2; n <= 6; ++n)
        for (int e = 1; e < n; ++e)
            EXPECT_LT((eval_cmzv(idx({1}, {e}, n), cfg) - eval_weight1_closed(RootOfUnity(e, n), cfg)).abs(), tol());
}

TEST_F(Numerics, PiI)
{
    EvalConfig c30 = cfg;
    c30.precision = 30;
    const BigComplex p = pi_i(c30);
    EXPECT_LT(distance(p, "0", "3.14159265358979323846264338328"), pow10_neg(29));
    const BigComplex sq = p * p;
    EXPECT_LT(boost::multiprecision::abs(sq.re + Real(pi) * Real(pi)), pow10_neg(28));
    Evaluator ev(cfg);
    EXPECT_LT((ev.pi_i_power(2) - sq).abs(), pow10_neg(28));
    EXPECT_EQ((p * Real(0)).abs(), 0);
}

TEST_F(Numerics, EulerIdentity)
{
    Evaluator ev(cfg);
    BigComplex v = ev.cmzv(idx({2}, {0}, 1)) * Real(6);
    v += ev.pi_i_power(2);
    EXPECT_LT(v.abs(), pow10_neg(35));
}

TEST_F(Numerics, ConjugationSymmetry)
{
    for (int n : {3, 4, 5, 6}) {
        for (const auto& i : admissible_indices_of_weight(n, 3, 3)) {
            const BigComplex a = eval_cmzv(i, cfg);
            const BigComplex b = eval_cmzv(i.conj(), cfg);
            EXPECT_LT((a - b.conj()).abs(), a.err + b.err + tol()) << i.to_string();
        }
    }
}

TEST_F(Numerics, DoublingPrecisionConsistency)
{
    EvalConfig hi = cfg;
    hi.precision = cfg.precision + 10;
    for (int n : {1, 2, 3, 4, 6}) {
        for (const auto& i : admissible_indices_of_weight(n, 3, 2)) {
            const BigComplex a = eval_cmzv(i, cfg);
            const BigComplex b = eval_cmzv(i, hi);
            EXPECT_LT((a - b).abs(), tol()) << i.to_string();
            EXPECT_LE(a.err, tol());
        }
    }
}

TEST_F(Numerics, DirectSummationAgrees)
{
    // The direct nested sum is an independent low-precision oracle.
    EvalConfig low;
    low.precision = 20;
    low.max_terms = 20000;
    for (int n : {2, 3, 4}) {
        for (const auto& i : admissible_indices_of_weight(n, 2, 2)) {
            const BigComplex d = eval_cmzv_direct(i, low);
            const BigComplex v = eval_cmzv(i, cfg);
            EXPECT_LT((d - v).abs(), d.err + pow10_neg(12)) << i.to_string();
        }
    }
    // Flat tail with Euler-Maclaurin correction.
    const BigComplex d = eval_cmzv_direct(idx({1, 2}, {1, 0}, 3), low);
    EXPECT_LT((d - eval_cmzv(idx({1, 2}, {1, 0}, 3), cfg)).abs(), d.err + pow10_neg(12));
}

TEST_F(Numerics, IteratedIntegralMatchesSeries)
{
    for (const auto& i : admissible_indices_of_weight(3, 3, 3)) {
        const BigComplex a = eval_word(index_to_word(i), cfg);
        const BigComplex b = eval_cmzv(i, cfg);
        EXPECT_LT((a - b).abs(), tol());
    }
}

TEST_F(Numerics, PrecisionUnreachable)
{
    EvalConfig tight = cfg;
    tight.precision = 200;
    tight.max_terms = 100;
    EXPECT_THROW(eval_cmzv(idx({2, 1}, {0, 1}, 2), tight), PrecisionUnreachable);
}

TEST_F(Numerics, ConfigValidation)
{
    EvalConfig bad;
    bad.precision = 3;
    EXPECT_THROW(bad.validate(), DomainError);
}

TEST_F(Numerics, RenderingHidesDigitsBelowError)
{
    const Real x("1.23456789");
    EXPECT_EQ(render_value(x, Real("1e-3"), 30), "1.23e+00");
    EXPECT_EQ(render_value(Real(0), Real("1e-5"), 30), "0e-4");
}

TEST_F(Numerics, EvaluatorMemoizes)
{
    Evaluator ev(cfg);
    const Index i = idx({2, 1}, {1, 2}, 3);
    const BigComplex a = ev.cmzv(i);
    const std::size_t n = ev.cached_values();
    const BigComplex b = ev.cmzv(i);
    EXPECT_EQ(ev.cached_values(), n);
    EXPECT_EQ(a.re, b.re);
    EXPECT_EQ(a.im, b.im);
}

TEST_F(Numerics, SymbolicEvaluation)
{
    Evaluator ev(cfg);
    EXPECT_EQ(ev.symbolic(SymbolicValue(3)).abs(), 0);
    const Index z2 = idx({2}, {0}, 1);
    EXPECT_LT((ev.symbolic(SymbolicValue::atom(z2)) - ev.cmzv(z2)).abs(), tol());
    const SymbolicValue s = SymbolicValue::atom(idx({1}, {1}, 2)) * CycloNumber(2, 2);
    EXPECT_LT(distance(ev.symbolic(s), "-1.38629436111989061883446424291635313615100026872051"), tol());
}
