#pragma once

#include <optional>
#include <vector>

#include "fid/decomposition.hpp"
#include "fid/partition.hpp"

// Generalized Pieri rule: inducing S^mu # trivial from S_m x S_a1 x ... x S_ah
// to S_n. The multiplicity of S^lambda is the number of chains
// mu = mu0 <= mu1 <= ... <= muh = lambda where mu_i/mu_{i-1} is a horizontal
// strip of a_i boxes.

namespace fid {

/// Every lambda containing mu with |lambda| = |mu| + boxes and lambda/mu a
/// horizontal strip, canonical order. With `bound`, only lambda inside it.
std::vector<Partition> add_horizontal_strip(const Partition& mu, int boxes,
                                            const std::optional<Partition>& bound = std::nullopt);

/// All strips of any size, i.e. every lambda interlacing mu, restricted to `bound`.
std::vector<Partition> add_any_horizontal_strip(const Partition& mu, const Partition& bound);

Decomposition pieri_product(const Partition& mu, const Composition& a);

BigInt chain_multiplicity(const Partition& mu, const Composition& a, const Partition& lambda);

/// Chains mu -> lambda through `steps` horizontal strips of unconstrained
/// (possibly zero) size: the multiplicity of S^lambda in the sum of
/// pieri_product(mu, a) over all length-`steps` compositions a.
BigInt strip_chain_count(const Partition& mu, const Partition& lambda, int steps);

}  // namespace fid
