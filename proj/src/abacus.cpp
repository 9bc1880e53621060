#include "abaci/abacus.hpp"

#include <algorithm>
#include <numeric>

namespace abaci {

BetaSequence::BetaSequence(std::vector<int> values) : values_(std::move(values)) {
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0)
            throw contract_error("beta numbers must be nonnegative");
        if (i > 0 && values_[i - 1] <= values_[i])
            throw contract_error("beta numbers must be strictly decreasing");
    }
}

BetaSequence beta_numbers(const Partition& lambda, int r) {
    if (r < lambda.num_parts())
        throw contract_error("beta_numbers: need r >= number of parts");
    std::vector<int> values(r);
    for (int i = 1; i <= r; ++i) values[i - 1] = lambda.part(i) - i + r;
    return BetaSequence(std::move(values));
}

Partition partition_from_beta(const BetaSequence& beta) {
    int r = beta.bead_count();
    std::vector<int> parts;
    for (int i = 1; i <= r; ++i) {
        int lam = beta.values()[i - 1] + i - r;
        if (lam == 0) break;
        parts.push_back(lam);
    }
    return Partition(std::move(parts));
}

AbacusDisplay::AbacusDisplay(int p, std::vector<int> occupied)
    : p_(p), occupied_(std::move(occupied)) {
    if (p < 2) throw contract_error("abacus needs p >= 2");
    std::sort(occupied_.begin(), occupied_.end());
    if (occupied_.empty() || occupied_.size() % p != 0)
        throw contract_error("bead count must be a positive multiple of p");
    for (size_t i = 0; i < occupied_.size(); ++i) {
        if (occupied_[i] < 0)
            throw contract_error("bead positions must be nonnegative");
        if (i > 0 && occupied_[i - 1] == occupied_[i])
            throw contract_error("bead positions must be distinct");
    }
}

bool AbacusDisplay::occupied(int pos) const {
    return std::binary_search(occupied_.begin(), occupied_.end(), pos);
}

int AbacusDisplay::rows() const {
    int used = occupied_.back() / p_ + 1;
    return std::max(r() / p_, used);
}

int canonical_bead_count(const Partition& lambda, int p) {
    int t = std::max(lambda.num_parts(), 1);
    return ((t + p - 1) / p) * p;
}

AbacusDisplay abacus_display(const Partition& lambda, int p, int r) {
    if (p < 2) throw contract_error("abacus needs p >= 2");
    if (r == 0) r = canonical_bead_count(lambda, p);
    if (r % p != 0)
        throw contract_error("bead count must be a multiple of p");
    if (r < lambda.num_parts())
        throw contract_error("bead count too small for partition");
    return AbacusDisplay(p, beta_numbers(lambda, r).values());
}

Partition partition_from_display(const AbacusDisplay& disp) {
    std::vector<int> beta(disp.positions());
    std::sort(beta.begin(), beta.end(), std::greater<>());
    return partition_from_beta(BetaSequence(std::move(beta)));
}

PushUpResult push_up(const AbacusDisplay& disp) {
    int p = disp.p();
    std::vector<int> counts(p, 0);
    int moves = 0;
    for (int pos : disp.positions()) moves += pos / p;
    std::vector<int> packed;
    for (int pos : disp.positions()) ++counts[pos % p];
    for (int i = 0; i < p; ++i) {
        for (int s = 0; s < counts[i]; ++s) packed.push_back(s * p + i);
        // beads now sit in rows 1..counts[i]; subtract their residual depth
        moves -= counts[i] * (counts[i] - 1) / 2;
    }
    return {AbacusDisplay(p, std::move(packed)), moves};
}

Partition p_core(const Partition& lambda, int p) {
    return partition_from_display(push_up(abacus_display(lambda, p)).display);
}

int p_weight(const Partition& lambda, int p) {
    return push_up(abacus_display(lambda, p)).moves;
}

PQuotient::PQuotient(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw contract_error("p-quotient needs at least one component");
}

int PQuotient::total_size() const {
    int s = 0;
    for (const auto& c : components_) s += c.size();
    return s;
}

PQuotient p_quotient(const Partition& lambda, int p) {
    auto disp = abacus_display(lambda, p);
    std::vector<std::vector<int>> gaps(p);
    std::vector<int> seen(p, 0);
    for (int pos : disp.positions()) {
        int i = pos % p;
        ++seen[i];
        int gap = pos / p + 1 - seen[i];  // empty spots above this bead
        if (gap > 0) gaps[i].push_back(gap);
    }
    std::vector<Partition> components;
    components.reserve(p);
    for (auto& g : gaps) {
        std::reverse(g.begin(), g.end());
        components.emplace_back(std::move(g));
    }
    return PQuotient(std::move(components));
}

std::vector<int> runner_counts(const AbacusDisplay& disp) {
    std::vector<int> counts(disp.p(), 0);
    for (int pos : disp.positions()) ++counts[pos % disp.p()];
    return counts;
}

Partition reconstruct(const Partition& core, const PQuotient& quotient, int p) {
    if (static_cast<int>(quotient.components().size()) != p)
        throw contract_error("reconstruct: quotient must have p components");
    if (p_weight(core, p) != 0)
        throw contract_error("reconstruct: core has nonzero p-weight");
    int longest = 0;
    for (const auto& c : quotient.components())
        longest = std::max(longest, c.num_parts());
    // Enlarge the core display until every runner can absorb its gaps.
    int r = canonical_bead_count(core, p);
    for (;;) {
        auto counts = runner_counts(abacus_display(core, p, r));
        if (*std::min_element(counts.begin(), counts.end()) >= longest) break;
        r += p;
    }
    auto counts = runner_counts(abacus_display(core, p, r));
    std::vector<int> positions;
    positions.reserve(r);
    for (int i = 0; i < p; ++i) {
        const auto& comp = quotient.components()[i].parts();
        int c = counts[i];
        // jth bead from the top gets the jth smallest gap (zeros first).
        for (int j = 1; j <= c; ++j) {
            int from_back = c - j;  // 0 for the bottom bead
            int gap = from_back < static_cast<int>(comp.size())
                          ? comp[from_back]
                          : 0;
            positions.push_back((j - 1 + gap) * p + i);
        }
    }
    return partition_from_display(AbacusDisplay(p, std::move(positions)));
}

std::vector<RemovableBead> removable_beads(const AbacusDisplay& disp) {
    int r = disp.r();
    std::vector<RemovableBead> out;
    // ith largest position is β_i, giving node (i, β_i − r + i).
    const auto& pos = disp.positions();
    for (int k = static_cast<int>(pos.size()) - 1; k >= 0; --k) {
        int l = pos[k];
        if (l < 1 || disp.occupied(l - 1)) continue;
        int i = static_cast<int>(pos.size()) - k;
        Node node{i, l - r + i};
        out.push_back({l, node, l % disp.p()});
    }
    std::sort(out.begin(), out.end(),
              [](const RemovableBead& a, const RemovableBead& b) {
                  return a.node.row < b.node.row;
              });
    return out;
}

AbacusDisplay slide_bead(const AbacusDisplay& disp, int from, int to) {
    if (!disp.occupied(from) || disp.occupied(to) || to < 0)
        throw contract_error("slide_bead: need occupied source, free target");
    std::vector<int> pos = disp.positions();
    *std::find(pos.begin(), pos.end(), from) = to;
    return AbacusDisplay(disp.p(), std::move(pos));
}

std::string render_ascii(const AbacusDisplay& disp, const RenderStyle& style) {
    std::string out;
    for (int i = 0; i < disp.p(); ++i) {
        if (i) out += ' ';
        out += std::to_string(i);
    }
    out += '\n';
    for (int s = 0; s < disp.rows(); ++s) {
        for (int i = 0; i < disp.p(); ++i) {
            if (i) out += ' ';
            out += disp.occupied(s * disp.p() + i) ? style.bead : style.gap;
        }
        out += '\n';
    }
    return out;
}

}  // namespace abaci
