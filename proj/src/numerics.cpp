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

#include "cmzv/numerics.hpp"

#include "cmzv/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <vector>

namespace cmzv {

namespace bmp = boost::multiprecision;

void EvalConfig::validate() const
{
    if (precision < 10) throw DomainError("EvalConfig: precision must be at least 10");
    if (max_terms < 100) throw DomainError("EvalConfig: max_terms must be at least 100");
    if (accel_order < 0) throw DomainError("EvalConfig: accel_order must be nonnegative");
}

int working_digits(const EvalConfig& cfg)
{
    return cfg.precision + 12;
}

namespace {

Real to_real(const Rational& q)
{
    return Real(bmp::numerator(q)) / Real(bmp::denominator(q));
}

Real two_pi()
{
    return 2 * boost::math::constants::pi<Real>();
}

// Plain complex pair for the inner loops; errors are bounded separately.
struct Cx {
    Real re{0};
    Real im{0};
};

Cx root_point(int exponent, int modulus)
{
    const Real angle = two_pi() * exponent / modulus;
    return Cx{bmp::cos(angle), bmp::sin(angle)};
}

Real modulus_of(const Cx& z)
{
    return bmp::sqrt(z.re * z.re + z.im * z.im);
}

// One iterated-integral letter: singular point a (0 for dt/t), with an
// optional sign from the change of variables.
struct Point {
    bool zero = false;
    Cx a;
};

// Evaluates I(a_1,...,a_j; y) for every prefix j, as power series in y.
std::vector<Cx> prefix_integrals(const std::vector<Point>& letters, const Real& y, long terms)
{
    std::vector<Cx> out;
    out.reserve(letters.size() + 1);
    out.push_back(Cx{Real(1), Real(0)});
    if (letters.empty()) return out;
    std::vector<Cx> d(static_cast<std::size_t>(terms) + 1);
    d[0] = Cx{Real(1), Real(0)};
    std::vector<Cx> next(d.size());
    for (const auto& p : letters) {
        if (p.zero) {
            if (d[0].re != 0 || d[0].im != 0) throw DomainError("iterated integral diverges at 0");
            next[0] = Cx{};
            for (std::size_t m = 1; m < d.size(); ++m) {
                next[m].re = d[m].re / m;
                next[m].im = d[m].im / m;
            }
        } else {
            // b = y / a
            const Real den = p.a.re * p.a.re + p.a.im * p.a.im;
            const Real b_re = y * p.a.re / den;
            const Real b_im = -y * p.a.im / den;
            Cx g;
            next[0] = Cx{};
            for (std::size_t m = 0; m + 1 < d.size(); ++m) {
                const Real s_re = d[m].re + g.re;
                const Real s_im = d[m].im + g.im;
                g.re = b_re * s_re - b_im * s_im;
                g.im = b_re * s_im + b_im * s_re;
                next[m + 1].re = g.re / (m + 1);
                next[m + 1].im = g.im / (m + 1);
            }
        }
        std::swap(d, next);
        Cx sum;
        for (const auto& c : d) {
            sum.re += c.re;
            sum.im += c.im;
        }
        out.push_back(std::move(sum));
    }
    return out;
}

long terms_needed(double rho, std::size_t depth, int digits)
{
    const double target = digits * std::log(10.0) + std::log(20.0) - std::log(1.0 - rho);
    long m = 16;
    while (true) {
        const double lhs = -m * std::log(rho) - static_cast<double>(depth) * std::log(1.0 + std::log(static_cast<double>(m)));
        if (lhs >= target) return m;
        m += std::max<long>(8, m / 8);
        if (m > 1000000000L) return m;
    }
}

} // namespace

BigComplex root_embed(const RootOfUnity& xi, int precision)
{
    WorkingPrecision wp(static_cast<unsigned>(precision + 10));
    const Cx z = root_point(xi.exponent(), xi.modulus());
    return BigComplex(z.re, z.im, pow10_neg(precision + 8));
}

BigComplex cyclo_embed(const CycloNumber& a, int precision)
{
    if (precision < 1) throw DomainError("cyclo_embed: precision must be positive");
    WorkingPrecision wp(static_cast<unsigned>(precision + 10));
    BigComplex out;
    const auto& coeffs = a.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        const Real c = to_real(coeffs[j]);
        if (j == 0) {
            out.re += c;
            continue;
        }
        const Cx z = root_point(static_cast<int>(j), a.modulus());
        out.re += c * z.re;
        out.im += c * z.im;
    }
    Real scale(0);
    for (const auto& c : coeffs) scale += bmp::abs(to_real(c));
    out.err = (scale + 1) * pow10_neg(precision + 8);
    return out;
}

BigComplex pi_i(const EvalConfig& cfg)
{
    const int wd = working_digits(cfg);
    WorkingPrecision wp(static_cast<unsigned>(wd));
    return BigComplex(Real(0), boost::math::constants::pi<Real>(), pow10_neg(wd - 2));
}

BigComplex eval_weight1_closed(const RootOfUnity& xi, const EvalConfig& cfg)
{
    if (xi.is_one()) throw DomainError("eval_weight1_closed: xi = 1 diverges");
    const int wd = working_digits(cfg);
    WorkingPrecision wp(static_cast<unsigned>(wd));
    const Cx z = root_point(xi.exponent(), xi.modulus());
    const Real x = 1 - z.re;
    const Real y = -z.im;
    const Real log_abs = bmp::log(x * x + y * y) / 2;
    const Real arg = bmp::atan2(y, x);
    return BigComplex(-log_abs, -arg, pow10_neg(wd - 2));
}

BigComplex eval_word(const Word& w, const EvalConfig& cfg)
{
    cfg.validate();
    if (!w.in_h0()) throw DomainError("eval_word: word not in h^0: " + w.to_string());
    if (w.empty()) return BigComplex(Real(1), Real(0), Real(0));
    const int wd = working_digits(cfg);
    WorkingPrecision wp(static_cast<unsigned>(wd));
    const int n = w.modulus();
    const std::size_t len = w.size();
    const Real half = Real(1) / 2;

    // Lower half: letters as they are. Upper half: t -> 1 - t reverses the
    // word and maps dt/t to dt/(1 - s), dt/(1 - t) to ds/s and dt/(a - t) to
    // -ds/((1 - a) - s), counted with the reversed orientation.
    std::vector<Point> lower;
    std::vector<Point> upper;
    double rho = 0.0;
    auto track = [&](const Point& p) {
        if (p.zero) return;
        const double r = static_cast<double>(half / modulus_of(p.a));
        rho = std::max(rho, r);
    };
    for (const auto& l : w.letters()) {
        Point p;
        if (l.is_zero()) p.zero = true;
        else p.a = root_point(-l.exponent(), n);
        track(p);
        lower.push_back(p);
    }
    std::vector<int> signs;
    for (std::size_t i = len; i-- > 0;) {
        const Letter& l = w[i];
        Point p;
        if (l.is_zero()) {
            p.a = Cx{Real(1), Real(0)};
            signs.push_back(1);
        } else if (l.is_one()) {
            p.zero = true;
            signs.push_back(1);
        } else {
            const Cx a = root_point(-l.exponent(), n);
            p.a = Cx{1 - a.re, -a.im};
            signs.push_back(-1);
        }
        track(p);
        upper.push_back(p);
    }
    if (rho >= 1.0) throw PrecisionUnreachable("eval_word: series ratio >= 1 for modulus " + std::to_string(n));
    const long terms = terms_needed(rho, len, wd + 2);
    if (terms > cfg.max_terms)
        throw PrecisionUnreachable("eval_word: " + std::to_string(terms) + " series terms needed, cutoff is " +
                                   std::to_string(cfg.max_terms));

    const auto low = prefix_integrals(lower, half, terms);
    const auto up = prefix_integrals(upper, half, terms);

    const Real tail = pow10_neg(wd + 2);
    BigComplex total;
    Real magnitude(0);
    int sign = 1;
    // up[m] covers the last m letters of w; its sign is the product of their signs.
    std::vector<int> suffix_sign(len + 1, 1);
    for (std::size_t m = 1; m <= len; ++m) suffix_sign[m] = suffix_sign[m - 1] * signs[m - 1];
    for (std::size_t j = 0; j <= len; ++j) {
        const Cx& p = low[j];
        const Cx& q = up[len - j];
        sign = suffix_sign[len - j];
        const Real re = p.re * q.re - p.im * q.im;
        const Real im = p.re * q.im + p.im * q.re;
        total.re += sign * re;
        total.im += sign * im;
        const Real pa = bmp::abs(p.re) + bmp::abs(p.im);
        const Real qa = bmp::abs(q.re) + bmp::abs(q.im);
        magnitude += pa * qa;
        total.err += (pa + qa + tail) * tail;
    }
    const Real rounding = (magnitude + 1) * Real(terms) * Real(len + 1) * pow10_neg(wd - 1);
    total.err = 10 * (total.err + rounding);
    if (total.err > pow10_neg(cfg.precision))
        throw PrecisionUnreachable("eval_word: error bound above requested precision");
    return total;
}

BigComplex eval_cmzv(const Index& idx, const EvalConfig& cfg)
{
    if (!idx.is_admissible()) throw DomainError("eval_cmzv: non-admissible index " + idx.to_string());
    if (idx.depth() == 0) return BigComplex(Real(1), Real(0), Real(0));
    return eval_word(index_to_word(idx), cfg);
}

namespace {

// Even-index Bernoulli numbers B_2, B_4, ...
const std::vector<std::pair<long, long>>& bernoulli_even()
{
    static const std::vector<std::pair<long, long>> table{
        {1, 6}, {-1, 30}, {1, 42}, {-1, 30}, {5, 66}, {-691, 2730}, {7, 6}, {-3617, 510}, {43867, 798}, {-174611, 330}};
    return table;
}

// sum_{m > M} m^{-k} by Euler-Maclaurin with `order` Bernoulli corrections.
Real zeta_tail(int k, long big_m, int order)
{
    const Real m(big_m);
    Real out = bmp::pow(m, 1 - k) / (k - 1) - bmp::pow(m, -k) / 2;
    Real rising(1);
    Real factorial(1);
    const auto& b = bernoulli_even();
    const int n = std::min<int>(order, static_cast<int>(b.size()));
    for (int j = 1; j <= n; ++j) {
        // rising = (k)_{2j-1}, factorial = (2j)!
        rising *= (j == 1) ? Real(k) : Real(k + 2 * j - 3) * Real(k + 2 * j - 2);
        factorial *= Real(2 * j - 1) * Real(2 * j);
        out += Real(b[j - 1].first) / b[j - 1].second / factorial * rising * bmp::pow(m, -k - 2 * j + 1);
    }
    return out;
}

struct DirectRun {
    Cx at_half;
    Cx at_full;
};

} // namespace

BigComplex eval_cmzv_direct(const Index& idx, const EvalConfig& cfg)
{
    cfg.validate();
    if (!idx.is_admissible()) throw DomainError("eval_cmzv_direct: non-admissible index " + idx.to_string());
    if (idx.depth() == 0) return BigComplex(Real(1), Real(0), Real(0));
    const int digits = std::min(cfg.precision, 30) + 5;
    WorkingPrecision wp(static_cast<unsigned>(digits));
    const int n = idx.modulus();
    const std::size_t r = idx.depth();
    const long big_m = cfg.max_terms;
    const int order = cfg.accel_order;
    const std::size_t window = static_cast<std::size_t>(order) * static_cast<std::size_t>(n - 1) + 1;
    const bool flat_tail = idx.xi_exponents().back() == 0;

    std::vector<Cx> roots;
    for (int e = 0; e < n; ++e) roots.push_back(root_point(e, n));

    std::vector<Cx> s(r + 1);
    s[0] = Cx{Real(1), Real(0)};
    std::deque<Cx> recent;  // corrected partial sums U(m)
    auto corrected = [&](long m) {
        Cx u = s[r];
        if (flat_tail) {
            const Real t = zeta_tail(idx.k().back(), m, order);
            u.re += s[r - 1].re * t;
            u.im += s[r - 1].im * t;
        }
        return u;
    };
    auto averaged = [&]() {
        std::vector<Cx> seq(recent.begin(), recent.end());
        for (int round = 0; round < order && n > 1; ++round) {
            std::vector<Cx> nxt;
            for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= seq.size(); ++i) {
                Cx acc;
                for (int q = 0; q < n; ++q) {
                    acc.re += seq[i + q].re;
                    acc.im += seq[i + q].im;
                }
                acc.re /= n;
                acc.im /= n;
                nxt.push_back(acc);
            }
            seq = std::move(nxt);
        }
        return seq.back();
    };

    DirectRun run;
    const long half_m = big_m / 2;
    for (long m = 1; m <= big_m; ++m) {
        const Real inv = Real(1) / m;
        for (std::size_t j = r; j >= 1; --j) {
            const Cx& z = roots[static_cast<std::size_t>((static_cast<long>(idx.xi_exponents()[j - 1]) * m) % n)];
            const Real scale = bmp::pow(inv, idx.k()[j - 1]);
            const Cx& prev = s[j - 1];
            s[j].re += (prev.re * z.re - prev.im * z.im) * scale;
            s[j].im += (prev.re * z.im + prev.im * z.re) * scale;
        }
        if (m > big_m - static_cast<long>(window) || (m > half_m - static_cast<long>(window) && m <= half_m)) {
            recent.push_back(corrected(m));
            if (recent.size() > window) recent.pop_front();
        }
        if (m == half_m) {
            run.at_half = averaged();
            recent.clear();
        }
    }
    run.at_full = averaged();
    const Real dre = run.at_full.re - run.at_half.re;
    const Real dim = run.at_full.im - run.at_half.im;
    BigComplex out(run.at_full.re, run.at_full.im);
    out.err = 10 * bmp::sqrt(dre * dre + dim * dim) + pow10_neg(digits - 3);
    return out;
}

Evaluator::Evaluator(EvalConfig cfg) : cfg_(cfg)
{
    cfg_.validate();
}

BigComplex Evaluator::cmzv(const Index& idx)
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = values_.find(idx); it != values_.end()) return it->second;
    }
    BigComplex v = eval_cmzv(idx, cfg_);
    std::lock_guard lock(mutex_);
    return values_.try_emplace(idx, std::move(v)).first->second;
}

BigComplex Evaluator::word(const Word& w)
{
    if (!w.in_h0()) throw DomainError("Evaluator::word: word not in h^0: " + w.to_string());
    return cmzv(word_to_index(w));
}

BigComplex Evaluator::ncpoly(const NCPoly& p)
{
    WorkingPrecision wp(static_cast<unsigned>(working_digits(cfg_)));
    BigComplex out;
    for (const auto& [w, c] : p.terms()) out += constant(c) * word(w);
    return out;
}

BigComplex Evaluator::constant(const CycloNumber& c)
{
    return cyclo_embed(c, working_digits(cfg_));
}

BigComplex Evaluator::pi_i_power(int s)
{
    WorkingPrecision wp(static_cast<unsigned>(working_digits(cfg_)));
    BigComplex out(Real(1), Real(0));
    const BigComplex p = pi_i(cfg_);
    for (int i = 0; i < s; ++i) out *= p;
    return out;
}

BigComplex Evaluator::symbolic(const SymbolicValue& v)
{
    WorkingPrecision wp(static_cast<unsigned>(working_digits(cfg_)));
    BigComplex out;
    for (const auto& [t, c] : v.terms()) {
        BigComplex term = constant(c) * pi_i_power(t.pi_power);
        for (const auto& a : t.atoms) term *= cmzv(a);
        out += term;
    }
    return out;
}

std::size_t Evaluator::cached_values() const
{
    std::lock_guard lock(mutex_);
    return values_.size();
}

BigComplex eval_symbolic(const SymbolicValue& v, const EvalConfig& cfg)
{
    Evaluator ev(cfg);
    return ev.symbolic(v);
}

} // namespace cmzv
