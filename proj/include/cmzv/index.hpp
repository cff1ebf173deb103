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

#ifndef CMZV_INDEX_HPP
#define CMZV_INDEX_HPP

#include "cmzv/cyclotomic.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace cmzv {

/// A pair (k; xi) of exponents k_1..k_r >= 1 and N-th roots of unity
/// xi_1..xi_r. Summation runs over 0 < m_1 < ... < m_r, so entry r is the
/// outermost one.
class Index {
public:
    explicit Index(int modulus = 1);
    Index(std::vector<int> k, const std::vector<int>& xi_exponents, int modulus);
    Index(std::vector<int> k, const std::vector<RootOfUnity>& xi);

    int modulus() const { return modulus_; }
    std::size_t depth() const { return k_.size(); }
    int weight() const;

    const std::vector<int>& k() const { return k_; }
    const std::vector<int>& xi_exponents() const { return xi_; }
    RootOfUnity xi(std::size_t j) const { return RootOfUnity(xi_[j], modulus_); }

    /// Depth zero, or (k_r, xi_r) != (1, 1).
    bool is_admissible() const;

    /// xi_1 * ... * xi_r.
    RootOfUnity xi_product() const;
    /// Entrywise complex conjugate of xi; k unchanged.
    Index conj() const;
    /// Entries [0, j).
    Index front(std::size_t j) const;
    /// Entries [j, r).
    Index back(std::size_t j) const;
    Index appended(int k, const RootOfUnity& xi) const;

    /// Canonical text form "({k1,...};{e1,...})@N".
    std::string to_string() const;

    auto operator<=>(const Index&) const = default;

private:
    int modulus_;
    std::vector<int> k_;
    std::vector<int> xi_;
};

bool is_admissible(const Index& idx);

/// All indices of the given weight and depth <= max_depth, ordered by depth,
/// then composition k (lexicographic), then exponent vector (lexicographic).
std::vector<Index> indices_of_weight(int modulus, int weight, std::size_t max_depth);
std::vector<Index> admissible_indices_of_weight(int modulus, int weight, std::size_t max_depth);

} // namespace cmzv

#endif
