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

#include "cmzv/index.hpp"

#include "cmzv/errors.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace cmzv {

Index::Index(int modulus) : modulus_(modulus)
{
    if (modulus <= 0) throw DomainError("Index: modulus must be positive");
}

Index::Index(std::vector<int> k, const std::vector<int>& xi_exponents, int modulus)
    : modulus_(modulus), k_(std::move(k))
{
    if (modulus <= 0) throw DomainError("Index: modulus must be positive");
    if (k_.size() != xi_exponents.size()) throw DomainError("Index: k and xi have different lengths");
    for (int kj : k_)
        if (kj < 1) throw DomainError("Index: entries of k must be positive");
    xi_.reserve(xi_exponents.size());
    for (int e : xi_exponents) xi_.push_back(RootOfUnity(e, modulus).exponent());
}

Index::Index(std::vector<int> k, const std::vector<RootOfUnity>& xi)
    : modulus_(xi.empty() ? 1 : xi.front().modulus()), k_(std::move(k))
{
    if (k_.size() != xi.size()) throw DomainError("Index: k and xi have different lengths");
    for (int kj : k_)
        if (kj < 1) throw DomainError("Index: entries of k must be positive");
    for (const auto& r : xi) {
        if (r.modulus() != modulus_) throw ModulusMismatch(modulus_, r.modulus());
        xi_.push_back(r.exponent());
    }
}

int Index::weight() const
{
    return std::accumulate(k_.begin(), k_.end(), 0);
}

bool Index::is_admissible() const
{
    return k_.empty() || k_.back() != 1 || xi_.back() != 0;
}

RootOfUnity Index::xi_product() const
{
    RootOfUnity p = RootOfUnity::one(modulus_);
    for (std::size_t j = 0; j < depth(); ++j) p = p * xi(j);
    return p;
}

Index Index::conj() const
{
    Index out(*this);
    for (auto& e : out.xi_) e = RootOfUnity(-e, modulus_).exponent();
    return out;
}

Index Index::front(std::size_t j) const
{
    Index out(modulus_);
    out.k_.assign(k_.begin(), k_.begin() + static_cast<std::ptrdiff_t>(j));
    out.xi_.assign(xi_.begin(), xi_.begin() + static_cast<std::ptrdiff_t>(j));
    return out;
}

Index Index::back(std::size_t j) const
{
    Index out(modulus_);
    out.k_.assign(k_.begin() + static_cast<std::ptrdiff_t>(j), k_.end());
    out.xi_.assign(xi_.begin() + static_cast<std::ptrdiff_t>(j), xi_.end());
    return out;
}

Index Index::appended(int k, const RootOfUnity& xi) const
{
    if (xi.modulus() != modulus_) throw ModulusMismatch(modulus_, xi.modulus());
    if (k < 1) throw DomainError("Index: entries of k must be positive");
    Index out(*this);
    out.k_.push_back(k);
    out.xi_.push_back(xi.exponent());
    return out;
}

std::string Index::to_string() const
{
    std::ostringstream os;
    os << "({";
    for (std::size_t j = 0; j < k_.size(); ++j) os << (j ? "," : "") << k_[j];
    os << "};{";
    for (std::size_t j = 0; j < xi_.size(); ++j) os << (j ? "," : "") << xi_[j];
    os << "})@" << modulus_;
    return os.str();
}

bool is_admissible(const Index& idx)
{
    return idx.is_admissible();
}

namespace {

void compositions(int remaining, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (parts == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int first = 1; first <= remaining - static_cast<int>(parts) + 1; ++first) {
        cur.push_back(first);
        compositions(remaining - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Index> indices_of_weight(int modulus, int weight, std::size_t max_depth)
{
    std::vector<Index> out;
    if (weight == 0) {
        out.emplace_back(modulus);
        return out;
    }
    for (std::size_t depth = 1; depth <= max_depth && depth <= static_cast<std::size_t>(weight); ++depth) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(weight, depth, cur, comps);
        for (const auto& k : comps) {
            std::vector<int> xi(depth, 0);
            while (true) {
                out.emplace_back(k, xi, modulus);
                std::size_t pos = depth;
                while (pos > 0) {
                    --pos;
                    if (++xi[pos] < modulus) break;
                    xi[pos] = 0;
                    if (pos == 0) {
                        pos = depth + 1;
                        break;
                    }
                }
                if (pos == depth + 1) break;
            }
        }
    }
    return out;
}

std::vector<Index> admissible_indices_of_weight(int modulus, int weight, std::size_t max_depth)
{
    std::vector<Index> out;
    for (auto& idx : indices_of_weight(modulus, weight, max_depth))
        if (idx.is_admissible()) out.push_back(std::move(idx));
    return out;
}

} // namespace cmzv
