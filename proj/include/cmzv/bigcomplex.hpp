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

#ifndef CMZV_BIGCOMPLEX_HPP
#define CMZV_BIGCOMPLEX_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace cmzv {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default MPFR precision (decimal digits) for the enclosing scope.
class WorkingPrecision {
public:
    explicit WorkingPrecision(unsigned digits10);
    ~WorkingPrecision();
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

private:
    unsigned saved_;
};

/// 10^{-digits} at the current working precision.
Real pow10_neg(int digits);

/// Complex number with a first-order error bound: |value - true| <= err.
struct BigComplex {
    Real re{0};
    Real im{0};
    Real err{0};

    BigComplex() = default;
    BigComplex(Real re_, Real im_, Real err_ = Real(0)) : re(std::move(re_)), im(std::move(im_)), err(std::move(err_)) {}

    static BigComplex polar_unit(const Real& angle);

    /// |re| + |im|, an upper bound for the modulus used in error propagation.
    Real norm1() const;
    Real abs() const;
    BigComplex conj() const { return BigComplex(re, -im, err); }

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);
    BigComplex& operator*=(const Real& rhs);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator*(BigComplex a, const Real& b) { return a *= b; }
    BigComplex operator-() const { return BigComplex(-re, -im, err); }
};

/// Scientific decimal rendering with the given number of significant digits.
std::string to_decimal(const Real& x, int significant);
/// Renders x to as many digits as the error bound and max_digits permit,
/// never showing digits below err.
std::string render_value(const Real& x, const Real& err, int max_digits);
/// Scientific rendering of an error bound with three significant digits.
std::string render_error(const Real& err);

} // namespace cmzv

#endif
