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

#include "cmzv/lattice.hpp"

#include "cmzv/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <utility>

namespace cmzv {

namespace {

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Nearest integer to num/den, den > 0, halves rounded up.
Integer round_div(const Integer& num, const Integer& den)
{
    Integer twice = 2 * num + den;
    Integer d2 = 2 * den;
    Integer q = twice / d2;
    if (twice % d2 != 0 && twice < 0) q -= 1;
    return q;
}

// Integral LLL with 1-based bookkeeping: d[0] = 1, d[i] = det of the first
// i Gram rows, lambda[k][j] = d[j+1] * mu[k][j] in 0-based row terms.
struct Reducer {
    IntMatrix& b;
    std::size_t n;
    std::vector<Integer> d;
    std::vector<std::vector<Integer>> lam;

    explicit Reducer(IntMatrix& basis)
        : b(basis), n(basis.size()), d(basis.size() + 1, Integer(0)), lam(basis.size(), std::vector<Integer>(basis.size(), Integer(0)))
    {
    }

    void gram_row(std::size_t k)
    {
        for (std::size_t j = 0; j <= k; ++j) {
            Integer u = dot(b[k], b[j]);
            for (std::size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
            if (j < k) lam[k][j] = u;
            else {
                if (u == 0) throw DomainError("lll_reduce: rows are linearly dependent");
                d[k + 1] = u;
            }
        }
    }

    void redi(std::size_t k, std::size_t l)
    {
        if (2 * abs(lam[k][l]) <= d[l + 1]) return;
        const Integer q = round_div(lam[k][l], d[l + 1]);
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
        lam[k][l] -= q * d[l + 1];
        for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }

    void swapi(std::size_t k, std::size_t kmax)
    {
        std::swap(b[k], b[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        const Integer l = lam[k][k - 1];
        const Integer big = (d[k - 1] * d[k + 1] + l * l) / d[k];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            const Integer t = lam[i][k];
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
            lam[i][k - 1] = (big * t + l * lam[i][k]) / d[k + 1];
        }
        d[k] = big;
    }

    void run()
    {
        if (n == 0) return;
        d[0] = 1;
        d[1] = dot(b[0], b[0]);
        if (d[1] == 0) throw DomainError("lll_reduce: zero row");
        std::size_t k = 1;
        std::size_t kmax = 0;
        while (k < n) {
            if (k > kmax) {
                kmax = k;
                gram_row(k);
            }
            redi(k, k - 1);
            if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
                swapi(k, kmax);
                if (k > 1) --k;
                continue;
            }
            for (std::size_t l = k - 1; l-- > 0;) redi(k, l);
            ++k;
        }
    }
};

} // namespace

void lll_reduce(IntMatrix& basis)
{
    Reducer r(basis);
    r.run();
}

} // namespace cmzv
