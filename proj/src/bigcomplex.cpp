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

#include "cmzv/bigcomplex.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace cmzv {

WorkingPrecision::WorkingPrecision(unsigned digits10) : saved_(Real::default_precision())
{
    Real::default_precision(digits10);
}

WorkingPrecision::~WorkingPrecision()
{
    Real::default_precision(saved_);
}

Real pow10_neg(int digits)
{
    return boost::multiprecision::pow(Real(10), -digits);
}

BigComplex BigComplex::polar_unit(const Real& angle)
{
    return BigComplex(boost::multiprecision::cos(angle), boost::multiprecision::sin(angle),
                      pow10_neg(static_cast<int>(Real::default_precision())));
}

Real BigComplex::norm1() const
{
    return boost::multiprecision::abs(re) + boost::multiprecision::abs(im);
}

Real BigComplex::abs() const
{
    return boost::multiprecision::sqrt(re * re + im * im);
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs)
{
    re += rhs.re;
    im += rhs.im;
    err += rhs.err;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs)
{
    re -= rhs.re;
    im -= rhs.im;
    err += rhs.err;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs)
{
    const Real a = norm1();
    const Real b = rhs.norm1();
    Real new_re = re * rhs.re - im * rhs.im;
    Real new_im = re * rhs.im + im * rhs.re;
    err = a * rhs.err + b * err + err * rhs.err;
    re = std::move(new_re);
    im = std::move(new_im);
    return *this;
}

BigComplex& BigComplex::operator*=(const Real& rhs)
{
    re *= rhs;
    im *= rhs;
    err *= boost::multiprecision::abs(rhs);
    return *this;
}

std::string to_decimal(const Real& x, int significant)
{
    std::ostringstream os;
    os << std::scientific << std::setprecision(std::max(1, significant - 1)) << x;
    return os.str();
}

std::string render_value(const Real& x, const Real& err, int max_digits)
{
    int digits = max_digits;
    if (err > 0) {
        // Number of significant digits that remain above the error bound.
        const Real mag = boost::multiprecision::abs(x);
        const long e_err = static_cast<long>(std::floor(static_cast<double>(boost::multiprecision::log10(err))));
        if (mag == 0) {
            std::ostringstream os;
            os << "0e" << (e_err + 1);
            return os.str();
        }
        const long e_x = static_cast<long>(std::floor(static_cast<double>(boost::multiprecision::log10(mag))));
        const long allowed = e_x - e_err;
        if (allowed < 1) {
            std::ostringstream os;
            os << "0e" << (e_err + 1);
            return os.str();
        }
        digits = static_cast<int>(std::min<long>(allowed, max_digits));
    }
    return to_decimal(x, digits);
}

std::string render_error(const Real& err)
{
    return to_decimal(err, 3);
}

} // namespace cmzv
