#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abaci {

// Thrown when input text does not match the partition grammar.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a caller violates a documented precondition.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Cell (row, col) of a Young diagram, 1-indexed from the top-left.
struct Node {
    int row = 0;
    int col = 0;
    bool operator==(const Node&) const = default;
};

/* A partition is a weakly decreasing sequence of positive parts.
 * The empty sequence is the unique partition of 0. Immutable after
 * construction. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-indexed row length; 0 beyond the last part.
    int part(int row) const {
        return (row >= 1 && row <= num_parts()) ? parts_[row - 1] : 0;
    }

    bool contains(Node a) const {
        return a.row >= 1 && a.col >= 1 && a.col <= part(a.row);
    }

    // Exponent notation, e.g. "20^10,10^5,5^5"; the empty partition
    // renders as "0" (which parse_partition does not accept as a part,
    // so the empty string remains the parseable spelling).
    std::string str() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/* Grammar: comma-separated terms, each `n` or `n^m` with n, m positive
 * integers; m is a multiplicity. Parts must come out weakly decreasing.
 * Whitespace around terms is ignored; the empty string is the empty
 * partition. */
Partition parse_partition(std::string_view text);

// All partitions of d in reverse-lexicographic order; d=0 gives {∅}.
std::vector<Partition> partitions_of(int d);

// Conjugate partition: λ'_j = #{i : λ_i ≥ j}.
Partition transpose(const Partition& lambda);

// Nodes (i, λ_i) whose removal leaves a partition, by increasing row.
std::vector<Node> removable_nodes(const Partition& lambda);

Partition remove_node(const Partition& lambda, Node a);
Partition add_node(const Partition& lambda, Node a);

// (col − row) mod p, nonnegative.
int node_residue(Node a, int p);

struct CoreWeight {
    Partition core;
    int weight = 0;
    bool operator==(const CoreWeight&) const = default;
};

/* Rim p-hooks handled directly on the Young diagram, independent of any
 * abacus machinery. A rim p-hook with hand row i is the border strip of
 * exactly p cells starting at (i, λ_i) and following the rim down-left. */
std::vector<int> removable_rim_hook_rows(const Partition& lambda, int p);
Partition remove_rim_hook(const Partition& lambda, int p, int hand_row);

/* Strips rim p-hooks until none remains, scanning hands by decreasing
 * row. The (core, weight) result is order-independent; tests exercise
 * random removal orders via the two primitives above. */
CoreWeight p_core_by_stripping(const Partition& lambda, int p);

}  // namespace abaci
