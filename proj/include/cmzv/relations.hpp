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

#ifndef CMZV_RELATIONS_HPP
#define CMZV_RELATIONS_HPP

#include "cmzv/bigcomplex.hpp"
#include "cmzv/cyclotomic.hpp"
#include "cmzv/numerics.hpp"
#include "cmzv/symbolic.hpp"
#include "cmzv/symmetric_values.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cmzv {

/// Search for c_i in Z[zeta_N], not all zero, with sum c_i v_i ~ 0.
struct RelationProblem {
    int modulus = 1;
    /// Values accurate to at least `precision` digits.
    std::vector<BigComplex> values;
    /// Bound on every integer coordinate of every c_i in the power basis.
    long coeff_bound = 1000000;
    /// Digits used in the lattice; must be at least 20 + 10 * unknowns.
    int precision = 60;
    /// When set, only relations with c_required != 0 are accepted.
    std::optional<std::size_t> required;
};

struct Relation {
    std::vector<CycloNumber> coefficients;
    /// |sum c_i v_i| at the problem precision.
    Real residual;
    /// Largest integer coordinate.
    Integer height;
};

struct RelationSearch {
    std::optional<Relation> relation;
    /// Smallest |sum c_i v_i| over the reduced candidates satisfying the
    /// `required` constraint, regardless of the height bound.
    Real residual_floor;
};

/// phi(N) * values.size().
std::size_t relation_unknowns(const RelationProblem& p);

RelationSearch search_relation(const RelationProblem& p);
std::optional<Relation> find_relation(const RelationProblem& p);

struct CongruenceOptions {
    EvalConfig eval;
    long coeff_bound = 1000000;
    /// Largest numeric basis extracted from the generators.
    std::size_t max_basis = 14;
};

/// target = sum d_b * generator_b modulo the relation test.
struct Decomposition {
    /// One entry per generator; zero for generators outside the chosen basis.
    std::vector<CycloNumber> coefficients;
    Real residual;
};

/// Greedy numeric basis of the generator values in order: zero values and
/// values already in the K_N-span of earlier picks are skipped.
struct NumericBasis {
    int modulus = 1;
    std::vector<std::size_t> members;
    std::vector<BigComplex> values;
    int working_precision = 0;
};

int relation_working_precision(int modulus, std::size_t values, int floor_precision);

NumericBasis numeric_basis(int modulus, const std::vector<BigComplex>& values, const CongruenceOptions& opt);

/// Expresses target through the basis; nullopt when no relation with a
/// nonzero target coefficient exists within the bound.
struct Witness {
    std::optional<Decomposition> decomposition;
    Real residual_floor;
};
Witness express_in_basis(const BigComplex& target, const NumericBasis& basis, std::size_t generator_count,
                         const CongruenceOptions& opt);

std::optional<Decomposition> congruence_witness(const SymbolicValue& target, const std::vector<SymbolicValue>& generators,
                                                const CongruenceOptions& opt);

/// Per admissible atom of weight w: is it in the span of the symmetric values
/// zeta^sh_{alpha}(idx) over all indices of weight w, and pi i Z_{w-1}?
struct SpanCase {
    Index atom;
    bool expressed = false;
    Real residual;
    /// Coefficients over report generators (same order as SpanReport::generators).
    std::vector<CycloNumber> coefficients;
};

struct SpanReport {
    int modulus = 1;
    Alpha alpha{0, 1};
    int weight = 0;
    std::vector<std::string> generators;
    std::vector<std::size_t> basis;
    int working_precision = 0;
    std::vector<SpanCase> cases;

    bool all_expressed() const;
};

/// Generators of the spanning test in order: pi i times weight w-1 terms,
/// then the symmetric values of every index of weight w.
std::vector<std::pair<std::string, SymbolicValue>> spanning_generators(int modulus, const Alpha& alpha, int weight);

SpanReport spanning_test(int modulus, const Alpha& alpha, int weight, const CongruenceOptions& opt);

} // namespace cmzv

#endif
