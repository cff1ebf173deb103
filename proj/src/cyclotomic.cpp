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

#include "cmzv/cyclotomic.hpp"

#include "cmzv/errors.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

namespace cmzv {

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

int euler_phi(int n)
{
    if (n <= 0) throw DomainError("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int mobius(int n)
{
    if (n <= 0) throw DomainError("mobius: n must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

namespace {

using Poly = std::vector<std::int64_t>;

Poly multiply_by_xm_minus_1(const Poly& p, int m)
{
    Poly out(p.size() + m, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + m] += p[i];
        out[i] -= p[i];
    }
    return out;
}

// Exact division by x^m - 1; the caller guarantees divisibility.
Poly divide_by_xm_minus_1(const Poly& p, int m)
{
    Poly rem = p;
    Poly quot(p.size() - m, 0);
    for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(m);) {
        std::int64_t c = rem[i];
        quot[i - m] = c;
        rem[i] -= c;
        rem[i - m] += c;
    }
    return quot;
}

Poly compute_cyclotomic(int n)
{
    Poly num{1};
    std::vector<int> denominators;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mobius(d);
        if (mu == 1) num = multiply_by_xm_minus_1(num, n / d);
        else if (mu == -1) denominators.push_back(n / d);
    }
    for (int m : denominators) num = divide_by_xm_minus_1(num, m);
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    return num;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n)
{
    if (n <= 0) throw DomainError("cyclotomic_polynomial: n must be positive");
    static std::mutex mutex;
    static std::map<int, Poly> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

RootOfUnity::RootOfUnity(std::int64_t exponent, int modulus) : exponent_(0), modulus_(modulus)
{
    if (modulus <= 0) throw DomainError("RootOfUnity: modulus must be positive");
    std::int64_t e = exponent % modulus;
    if (e < 0) e += modulus;
    exponent_ = static_cast<int>(e);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const
{
    if (other.modulus_ != modulus_) throw ModulusMismatch(modulus_, other.modulus_);
    return RootOfUnity(static_cast<std::int64_t>(exponent_) + other.exponent_, modulus_);
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const
{
    std::int64_t r = e % modulus_;
    return RootOfUnity(static_cast<std::int64_t>(exponent_) * r, modulus_);
}

CycloNumber::CycloNumber(int modulus) : modulus_(modulus)
{
    coeffs_.assign(euler_phi(modulus), Rational(0));
}

CycloNumber::CycloNumber(int modulus, Rational value) : CycloNumber(modulus)
{
    coeffs_[0] = std::move(value);
}

CycloNumber CycloNumber::from_powers(int modulus, const std::vector<Rational>& powers)
{
    CycloNumber out(modulus);
    std::vector<Rational> buf = powers;
    if (buf.size() < out.coeffs_.size()) buf.resize(out.coeffs_.size(), Rational(0));
    out.coeffs_ = std::move(buf);
    out.reduce();
    return out;
}

CycloNumber CycloNumber::root(const RootOfUnity& xi)
{
    std::vector<Rational> powers(xi.exponent() + 1, Rational(0));
    powers[xi.exponent()] = 1;
    return from_powers(xi.modulus(), powers);
}

void CycloNumber::reduce()
{
    const auto& phi = cyclotomic_polynomial(modulus_);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = coeffs_.size(); i-- > d;) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        for (std::size_t j = 0; j <= d; ++j) coeffs_[i - d + j] -= c * phi[j];
    }
    coeffs_.resize(d);
}

void CycloNumber::check_modulus(const CycloNumber& rhs) const
{
    if (rhs.modulus_ != modulus_) throw ModulusMismatch(modulus_, rhs.modulus_);
}

bool CycloNumber::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs)
{
    check_modulus(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs)
{
    check_modulus(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs)
{
    check_modulus(rhs);
    const std::size_t d = coeffs_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(prod);
    reduce();
    return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& rhs)
{
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

CycloNumber CycloNumber::inverse() const
{
    if (is_zero()) throw DomainError("CycloNumber: inverse of zero");
    const std::size_t d = coeffs_.size();
    // Column j of the multiplication matrix is this * zeta^j.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
    CycloNumber col = *this;
    const CycloNumber zeta = root(RootOfUnity(1, modulus_));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
        col *= zeta;
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& v : m[c]) v *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
        }
    }
    CycloNumber out(modulus_);
    for (std::size_t i = 0; i < d; ++i) out.coeffs_[i] = m[i][d];
    return out;
}

CycloNumber CycloNumber::conj() const
{
    std::vector<Rational> powers(modulus_ + 1, Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) powers[(modulus_ - static_cast<int>(j)) % modulus_] += coeffs_[j];
    return from_powers(modulus_, powers);
}

bool CycloNumber::operator==(const CycloNumber& rhs) const
{
    return modulus_ == rhs.modulus_ && coeffs_ == rhs.coeffs_;
}

std::vector<std::string> CycloNumber::to_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

std::string CycloNumber::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << mag.str();
            continue;
        }
        if (mag != 1) os << mag.str() << "*";
        os << "z";
        if (j > 1) os << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

CycloNumber cyclo_mul(const CycloNumber& a, const CycloNumber& b)
{
    return a * b;
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& c)
{
    return os << c.to_string();
}

} // namespace cmzv
