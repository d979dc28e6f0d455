#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "loopblocks/drinfeld.hpp"
#include "loopblocks/root_system.hpp"

namespace loopblocks {

using WeightMultiset = std::map<Weight, std::int64_t>;

/// Full weight multiplicities of V(highest).
struct CharacterTable {
    Weight highest;
    WeightMultiset mult;

    std::int64_t at(const Weight& mu) const {
        auto it = mult.find(mu);
        return it == mult.end() ? 0 : it->second;
    }
    std::int64_t dimension() const;
};

/// Weyl dimension formula; throws DomainError on non-dominant input.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Freudenthal recursion over the dominant weights below lambda, then spread
/// over Weyl orbits.
CharacterTable freudenthal(const RootSystem& rs, const Weight& lambda);

/// Formal character of a tensor product of irreducibles.
WeightMultiset character_product(const RootSystem& rs, const std::vector<Weight>& highest_weights);

/// Multiplicities of irreducibles V(mu) in the tensor product, by peeling off
/// highest weights.
WeightMultiset tensor_decompose(const RootSystem& rs, const std::vector<Weight>& highest_weights);

/// Multiplicity of V(mu) in the tensor product of the V(lambda_j).
std::int64_t tensor_multiplicity(const RootSystem& rs, const std::vector<Weight>& highest_weights, const Weight& mu);

/// Dimension of the mu-weight space of the tensor product.
std::int64_t tensor_weight_multiplicity(const RootSystem& rs, const std::vector<Weight>& highest_weights,
                                        const Weight& mu);

/// Dimension of the Weyl module W(pi) in type A_l: prod_i binom(l+1, i)^{lambda_i}.
/// Throws DomainError for other types.
BigInt weyl_module_dim_type_A(const RootSystem& rs, const DrinfeldPoly& pi);

} // namespace loopblocks
