#pragma once

#include <vector>

#include "abaci/partition.hpp"

namespace abaci {

/* (p, p-core, p-weight) classifies the block containing S^λ: two Specht
 * modules for the same Σ_d lie in one block iff their p-cores agree. */
struct BlockDescriptor {
    int p = 2;
    Partition core;
    int weight = 0;

    int degree() const { return core.size() + p * weight; }
    bool operator==(const BlockDescriptor&) const = default;
};

BlockDescriptor block_descriptor(const Partition& lambda, int p);

// Requires |λ| = |μ|; blocks live in a fixed group algebra.
bool same_block(const Partition& lambda, const Partition& mu, int p);

/* p-rank of a defect group of the block, i.e. the weight w: a defect
 * group is a Sylow p-subgroup of Σ_{pw}. Upper-bounds the complexity of
 * every module in the block. */
int defect_p_rank(const BlockDescriptor& b);

// Specht factors of the restriction to Σ_{d−1}: [λ_A for each removable
// node A], each occurring exactly once.
std::vector<Partition> restriction_factors(const Partition& lambda);

/* Proven upper bound on the complexity of S^λ: w−1 when λ is p×p,
 * otherwise the block bound w. */
int complexity_upper_bound(const Partition& lambda, int p);

}  // namespace abaci
