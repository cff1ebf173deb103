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

#ifndef CMZV_CYCLOTOMIC_HPP
#define CMZV_CYCLOTOMIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cmzv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

int euler_phi(int n);
int mobius(int n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// The polynomial is monic of degree euler_phi(n).
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// An N-th root of unity e^{2 pi i e / N}, stored as its exponent e in Z/NZ.
class RootOfUnity {
public:
    RootOfUnity(std::int64_t exponent, int modulus);

    static RootOfUnity one(int modulus) { return RootOfUnity(0, modulus); }

    int exponent() const { return exponent_; }
    int modulus() const { return modulus_; }
    bool is_one() const { return exponent_ == 0; }

    RootOfUnity operator*(const RootOfUnity& other) const;
    RootOfUnity conj() const { return RootOfUnity(-static_cast<std::int64_t>(exponent_), modulus_); }
    RootOfUnity pow(std::int64_t e) const;

    auto operator<=>(const RootOfUnity&) const = default;

private:
    int exponent_;
    int modulus_;
};

/// Exact element of the cyclotomic field Q(zeta_N) in the power basis
/// 1, zeta_N, ..., zeta_N^{phi(N)-1}. Always fully reduced modulo Phi_N, so
/// equality is coefficient comparison.
class CycloNumber {
public:
    explicit CycloNumber(int modulus = 1);
    CycloNumber(int modulus, Rational value);
    CycloNumber(int modulus, long value) : CycloNumber(modulus, Rational(value)) {}
    CycloNumber(int modulus, int value) : CycloNumber(modulus, Rational(value)) {}

    /// Reduces an arbitrary-length coefficient vector (in powers of zeta_N).
    static CycloNumber from_powers(int modulus, const std::vector<Rational>& powers);
    static CycloNumber root(const RootOfUnity& xi);

    int modulus() const { return modulus_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coefficient; only meaningful when is_rational().
    const Rational& rational_part() const { return coeffs_.front(); }

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& rhs);
    CycloNumber& operator-=(const CycloNumber& rhs);
    CycloNumber& operator*=(const CycloNumber& rhs);
    CycloNumber& operator*=(const Rational& rhs);

    friend CycloNumber operator+(CycloNumber lhs, const CycloNumber& rhs) { return lhs += rhs; }
    friend CycloNumber operator-(CycloNumber lhs, const CycloNumber& rhs) { return lhs -= rhs; }
    friend CycloNumber operator*(CycloNumber lhs, const CycloNumber& rhs) { return lhs *= rhs; }
    friend CycloNumber operator*(CycloNumber lhs, const Rational& rhs) { return lhs *= rhs; }
    friend CycloNumber operator*(const Rational& lhs, CycloNumber rhs) { return rhs *= lhs; }

    /// Multiplicative inverse; throws DomainError for zero.
    CycloNumber inverse() const;

    /// Image under the Galois automorphism zeta -> zeta^{-1} (complex conjugation).
    CycloNumber conj() const;

    bool operator==(const CycloNumber& rhs) const;

    /// Coefficients as exact rational strings ("p/q" or "p").
    std::vector<std::string> to_strings() const;
    /// Human-readable form, e.g. "1/2 - 3*z^2" where z = zeta_N.
    std::string to_string() const;

private:
    void check_modulus(const CycloNumber& rhs) const;
    void reduce();

    int modulus_;
    std::vector<Rational> coeffs_;
};

/// Field multiplication with modulus check (throws ModulusMismatch).
CycloNumber cyclo_mul(const CycloNumber& a, const CycloNumber& b);

std::ostream& operator<<(std::ostream& os, const CycloNumber& c);

} // namespace cmzv

#endif
