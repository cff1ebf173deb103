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

#ifndef CMZV_LATTICE_HPP
#define CMZV_LATTICE_HPP

#include "cmzv/cyclotomic.hpp"

#include <vector>

namespace cmzv {

using IntMatrix = std::vector<std::vector<Integer>>;

/// In-place LLL reduction (delta = 3/4) of the rows of `basis` in exact
/// integer arithmetic. Rows must be linearly independent; throws DomainError
/// otherwise.
void lll_reduce(IntMatrix& basis);

} // namespace cmzv

#endif
