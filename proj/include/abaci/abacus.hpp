#pragma once

#include <string>
#include <vector>

#include "abaci/partition.hpp"

namespace abaci {

/* Strictly decreasing nonnegative integers β_i = λ_i − i + r for a bead
 * count r ≥ #parts. With r = #parts these are the first-column hook
 * lengths of λ. */
class BetaSequence {
public:
    explicit BetaSequence(std::vector<int> values);
    const std::vector<int>& values() const { return values_; }
    int bead_count() const { return static_cast<int>(values_.size()); }

private:
    std::vector<int> values_;
};

BetaSequence beta_numbers(const Partition& lambda, int r);
Partition partition_from_beta(const BetaSequence& beta);

/* Bead positions on p runners. Position l sits on runner l mod p in row
 * ⌊l/p⌋ + 1. The bead count r is always a positive multiple of p so
 * that removable beads on runner i carry residue i. */
class AbacusDisplay {
public:
    AbacusDisplay(int p, std::vector<int> occupied);

    int p() const { return p_; }
    int r() const { return static_cast<int>(occupied_.size()); }
    bool occupied(int pos) const;
    // Sorted ascending.
    const std::vector<int>& positions() const { return occupied_; }
    // Rows needed to show every bead (at least r/p).
    int rows() const;

    bool operator==(const AbacusDisplay&) const = default;

private:
    int p_;
    std::vector<int> occupied_;
};

// Smallest positive multiple of p that is ≥ #parts(λ).
int canonical_bead_count(const Partition& lambda, int p);

// r = 0 selects the canonical bead count; otherwise p | r, r ≥ #parts.
AbacusDisplay abacus_display(const Partition& lambda, int p, int r = 0);

Partition partition_from_display(const AbacusDisplay& disp);

struct PushUpResult {
    AbacusDisplay display;
    int moves = 0;  // single-row slides, = p-weight
};

// Slides every bead as far up as possible on its runner.
PushUpResult push_up(const AbacusDisplay& disp);

Partition p_core(const Partition& lambda, int p);
int p_weight(const Partition& lambda, int p);

// p partitions recording how far each bead travels in push_up; their
// sizes sum to the p-weight.
class PQuotient {
public:
    explicit PQuotient(std::vector<Partition> components);
    const std::vector<Partition>& components() const { return components_; }
    int total_size() const;
    bool operator==(const PQuotient&) const = default;

private:
    std::vector<Partition> components_;
};

PQuotient p_quotient(const Partition& lambda, int p);

// Beads per runner; sums to r.
std::vector<int> runner_counts(const AbacusDisplay& disp);

// Unique λ with the given p-core and p-quotient.
Partition reconstruct(const Partition& core, const PQuotient& quotient, int p);

struct RemovableBead {
    int position = 0;
    Node node;
    int residue = 0;
    bool operator==(const RemovableBead&) const = default;
};

/* Beads at occupied l with l−1 free; sliding one to l−1 removes the
 * listed node. Ordered by increasing node row, in bijection with
 * removable_nodes of the displayed partition. */
std::vector<RemovableBead> removable_beads(const AbacusDisplay& disp);

// Display after sliding the bead at `from` to the free position `to`.
AbacusDisplay slide_bead(const AbacusDisplay& disp, int from, int to);

struct RenderStyle {
    std::string bead = "●";
    std::string gap = "|";
};

inline RenderStyle ascii_style() { return {"O", "."}; }

/* One header line with runner labels 0..p−1, then one line per row.
 * Cells are single glyphs separated by one space; byte-stable for a
 * fixed style. */
std::string render_ascii(const AbacusDisplay& disp,
                         const RenderStyle& style = {});

}  // namespace abaci
