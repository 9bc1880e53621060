#include "abaci/block.hpp"

#include "abaci/abacus.hpp"
#include "abaci/theorems.hpp"

namespace abaci {

BlockDescriptor block_descriptor(const Partition& lambda, int p) {
    return {p, p_core(lambda, p), p_weight(lambda, p)};
}

bool same_block(const Partition& lambda, const Partition& mu, int p) {
    if (lambda.size() != mu.size())
        throw contract_error("same_block: partitions of different degrees");
    return p_core(lambda, p) == p_core(mu, p);
}

int defect_p_rank(const BlockDescriptor& b) { return b.weight; }

std::vector<Partition> restriction_factors(const Partition& lambda) {
    if (lambda.empty())
        throw contract_error("restriction_factors: empty partition");
    std::vector<Partition> out;
    for (Node a : removable_nodes(lambda)) out.push_back(remove_node(lambda, a));
    return out;
}

int complexity_upper_bound(const Partition& lambda, int p) {
    int w = p_weight(lambda, p);
    // ∅ is vacuously p×p but has weight 0; the bound stays 0.
    return (is_p_by_p(lambda, p) && !lambda.empty()) ? w - 1 : w;
}

}  // namespace abaci
