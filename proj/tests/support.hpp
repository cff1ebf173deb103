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

#ifndef CMZV_TESTS_SUPPORT_HPP
#define CMZV_TESTS_SUPPORT_HPP

#include "cmzv/bigcomplex.hpp"
#include "cmzv/cyclotomic.hpp"
#include "cmzv/index.hpp"

#include <random>
#include <string>
#include <vector>

namespace cmzv::testing {

inline Index idx(std::vector<int> k, std::vector<int> e, int n)
{
    return Index(std::move(k), e, n);
}

inline CycloNumber cn(int n, std::vector<long> powers)
{
    std::vector<Rational> p;
    for (long v : powers) p.emplace_back(v);
    return CycloNumber::from_powers(n, p);
}

/// |z - (re + i im)| with the reference given as decimal strings.
inline Real distance(const BigComplex& z, const std::string& re, const std::string& im = "0")
{
    const BigComplex ref{Real(re), Real(im)};
    return (z - ref).abs();
}

inline CycloNumber random_cyclo(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> p;
    for (int j = 0; j < n; ++j) p.emplace_back(num(rng), den(rng));
    return CycloNumber::from_powers(n, p);
}

inline Index random_index(std::mt19937& rng, int n, int max_depth, int max_k)
{
    std::uniform_int_distribution<int> depth(0, max_depth);
    std::uniform_int_distribution<int> kd(1, max_k);
    std::uniform_int_distribution<int> ed(0, n - 1);
    const int r = depth(rng);
    std::vector<int> k;
    std::vector<int> e;
    for (int i = 0; i < r; ++i) {
        k.push_back(kd(rng));
        e.push_back(ed(rng));
    }
    return Index(k, e, n);
}

} // namespace cmzv::testing

#endif
