#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abaci/abacus.hpp"
#include "abaci/partition.hpp"

namespace abaci {

// Every part and every part-multiplicity divisible by p (∅ qualifies).
bool is_p_by_p(const Partition& lambda, int p);

// Empty p-core and constant p-quotient; agrees with is_p_by_p.
bool is_p_by_p_abacus(const Partition& lambda, int p);

// Every row of the canonical display empty or completely full; the
// third equivalent form of the same predicate.
bool has_full_or_empty_rows(const Partition& lambda, int p);

// p×p with a recursively p×p quotient component; ∅ is the base case.
bool is_p_by_p_recursive(const Partition& lambda, int p);

/* Weight change w(λ_A) − w(λ) from sliding the removable bead at
 * `bead_position` up one spot, computed from runner counts alone:
 * residue i>0 gives λ^[i] − λ^[i−1] − 1, residue 0 gives
 * λ^[0] − λ^[p−1] − 2. */
int predicted_weight_delta(const AbacusDisplay& disp, int bead_position);

struct NodeDelta {
    Node node;
    int residue = 0;
    int predicted_delta = 0;
    int actual_delta = 0;
};

/* Per-partition record of the weight-drop check: λ is p×p iff every
 * removable node drops the weight by at least 2 (and then by exactly 2). */
struct TheoremReport {
    Partition partition;
    int p = 2;
    int weight = 0;
    bool is_pxp = false;
    std::vector<NodeDelta> nodes;
    bool verdict = false;
    // Internal cross-check mismatches; any entry marks a counterexample.
    std::vector<std::string> failures;

    bool counterexample() const { return !verdict || !failures.empty(); }
    int min_delta() const;
    int max_delta() const;
};

TheoremReport check_theorem(const Partition& lambda, int p);

// One CSV-friendly line per partition checked.
struct CampaignRow {
    int d = 0;
    std::string partition;
    bool is_pxp = false;
    int weight = 0;
    int min_delta = 0;
    int max_delta = 0;
    bool verdict = false;
};

struct CampaignSummary {
    int p = 2;
    int d_min = 1;
    int d_max = 1;
    std::int64_t partitions_checked = 0;
    std::vector<TheoremReport> counterexamples;  // expected empty
    std::vector<CampaignRow> rows;               // filled on request
    double wall_seconds = 0.0;

    bool verified() const { return counterexamples.empty(); }
};

struct VerifyOptions {
    int threads = 1;          // 0 = hardware concurrency
    bool collect_rows = false;
};

/* Runs check_theorem over every λ ⊢ d, 1 ≤ d ≤ d_max. Deterministic
 * output (d ascending, reverse-lex within d) at any thread count. */
CampaignSummary verify_range(int p, int d_max, VerifyOptions opts = {});

}  // namespace abaci
