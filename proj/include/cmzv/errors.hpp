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

#ifndef CMZV_ERRORS_HPP
#define CMZV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmzv {

/// Two operands carry different cyclotomic moduli N.
class ModulusMismatch : public std::invalid_argument {
public:
    ModulusMismatch(int lhs, int rhs)
        : std::invalid_argument("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An argument lies outside the domain of an operation (non-admissible index,
/// word outside h^1, xi = 1 for the weight-one closed form, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested precision cannot be met within the configured series cutoff.
class PrecisionUnreachable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A combinatorial enumeration would exceed its configured size cap.
class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cmzv

#endif
