#include "abaci/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace abaci {

bool is_p_by_p(const Partition& lambda, int p) {
    const auto& parts = lambda.parts();
    for (size_t k = 0; k < parts.size();) {
        size_t j = k;
        while (j < parts.size() && parts[j] == parts[k]) ++j;
        if (parts[k] % p != 0 || (j - k) % p != 0) return false;
        k = j;
    }
    return true;
}

bool is_p_by_p_abacus(const Partition& lambda, int p) {
    if (!p_core(lambda, p).empty()) return false;
    auto quotient = p_quotient(lambda, p);
    const auto& comps = quotient.components();
    return std::all_of(comps.begin(), comps.end(),
                       [&](const Partition& c) { return c == comps[0]; });
}

bool has_full_or_empty_rows(const Partition& lambda, int p) {
    auto disp = abacus_display(lambda, p);
    std::vector<int> per_row(disp.rows(), 0);
    for (int pos : disp.positions()) ++per_row[pos / p];
    return std::all_of(per_row.begin(), per_row.end(),
                       [&](int c) { return c == 0 || c == p; });
}

bool is_p_by_p_recursive(const Partition& lambda, int p) {
    if (lambda.empty()) return true;
    if (!is_p_by_p(lambda, p)) return false;
    // p×p means all quotient components agree; recurse on the common one.
    return is_p_by_p_recursive(p_quotient(lambda, p).components()[0], p);
}

int predicted_weight_delta(const AbacusDisplay& disp, int bead_position) {
    if (bead_position < 1 || !disp.occupied(bead_position) ||
        disp.occupied(bead_position - 1))
        throw contract_error("predicted_weight_delta: bead is not removable");
    auto counts = runner_counts(disp);
    int p = disp.p();
    int i = bead_position % p;
    if (i > 0) return counts[i] - counts[i - 1] - 1;
    return counts[0] - counts[p - 1] - 2;
}

int TheoremReport::min_delta() const {
    int m = 0;
    for (size_t k = 0; k < nodes.size(); ++k)
        m = k ? std::min(m, nodes[k].actual_delta) : nodes[k].actual_delta;
    return m;
}

int TheoremReport::max_delta() const {
    int m = 0;
    for (size_t k = 0; k < nodes.size(); ++k)
        m = k ? std::max(m, nodes[k].actual_delta) : nodes[k].actual_delta;
    return m;
}

TheoremReport check_theorem(const Partition& lambda, int p) {
    TheoremReport rep;
    rep.partition = lambda;
    rep.p = p;
    rep.is_pxp = is_p_by_p(lambda, p);

    auto disp = abacus_display(lambda, p);
    auto pushed = push_up(disp);
    rep.weight = pushed.moves;

    // Cross-check the abacus weight/core against the rim-hook oracle so
    // one shared bug cannot fake a verdict.
    auto oracle = p_core_by_stripping(lambda, p);
    if (oracle.weight != rep.weight ||
        oracle.core != partition_from_display(pushed.display))
        rep.failures.push_back("abacus core/weight disagrees with rim-hook "
                               "stripping for " + lambda.str());
    if (rep.is_pxp != is_p_by_p_abacus(lambda, p) ||
        rep.is_pxp != has_full_or_empty_rows(lambda, p))
        rep.failures.push_back("p×p predicate forms disagree for " +
                               lambda.str());

    bool all_le_minus2 = true;
    for (const auto& bead : removable_beads(disp)) {
        NodeDelta nd;
        nd.node = bead.node;
        nd.residue = bead.residue;
        nd.predicted_delta = predicted_weight_delta(disp, bead.position);
        Partition removed = remove_node(lambda, bead.node);
        nd.actual_delta = p_weight(removed, p) - rep.weight;
        if (nd.predicted_delta != nd.actual_delta)
            rep.failures.push_back(
                "predicted delta " + std::to_string(nd.predicted_delta) +
                " != actual " + std::to_string(nd.actual_delta) + " at node (" +
                std::to_string(nd.node.row) + "," +
                std::to_string(nd.node.col) + ") of " + lambda.str());
        if (node_residue(bead.node, p) != bead.residue)
            rep.failures.push_back("bead residue mismatch for " + lambda.str());
        if (nd.actual_delta > -2) all_le_minus2 = false;
        rep.nodes.push_back(nd);
    }

    bool exactly_minus2 = std::all_of(
        rep.nodes.begin(), rep.nodes.end(),
        [](const NodeDelta& nd) { return nd.actual_delta == -2; });
    rep.verdict = (rep.is_pxp == all_le_minus2) &&
                  (!rep.is_pxp || exactly_minus2);

    if (all_le_minus2) {
        // Hypothesis side of the theorem forces nonincreasing runner counts.
        auto counts = runner_counts(disp);
        for (int i = 1; i < p; ++i)
            if (counts[i - 1] < counts[i])
                rep.failures.push_back(
                    "runner counts not nonincreasing for " + lambda.str());
    }
    return rep;
}

CampaignSummary verify_range(int p, int d_max, VerifyOptions opts) {
    if (d_max < 1) throw contract_error("verify_range: d_max must be >= 1");
    auto start = std::chrono::steady_clock::now();
    CampaignSummary summary;
    summary.p = p;
    summary.d_max = d_max;

    int threads = opts.threads;
    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());

    for (int d = 1; d <= d_max; ++d) {
        auto parts = partitions_of(d);
        summary.partitions_checked += static_cast<std::int64_t>(parts.size());
        std::vector<TheoremReport> reports(parts.size());
        auto worker = [&](size_t lo, size_t hi) {
            for (size_t k = lo; k < hi; ++k)
                reports[k] = check_theorem(parts[k], p);
        };
        if (threads == 1 || parts.size() < 64) {
            worker(0, parts.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (parts.size() + threads - 1) / threads;
            for (size_t lo = 0; lo < parts.size(); lo += chunk)
                pool.emplace_back(worker, lo,
                                  std::min(lo + chunk, parts.size()));
            for (auto& t : pool) t.join();
        }
        for (auto& rep : reports) {
            if (rep.counterexample()) summary.counterexamples.push_back(rep);
            if (opts.collect_rows)
                summary.rows.push_back({d, rep.partition.str(), rep.is_pxp,
                                        rep.weight, rep.min_delta(),
                                        rep.max_delta(), rep.verdict});
        }
    }
    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return summary;
}

}  // namespace abaci
