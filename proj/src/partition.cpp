#include "abaci/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace abaci {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1)
            throw contract_error("partition parts must be positive");
        if (k > 0 && parts_[k - 1] < parts_[k])
            throw contract_error("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < parts_.size();) {
        size_t j = k;
        while (j < parts_.size() && parts_[j] == parts_[k]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts_[k]);
        if (j - k > 1) {
            out += '^';
            out += std::to_string(j - k);
        }
        k = j;
    }
    return out;
}

namespace {

int parse_positive(std::string_view s, std::string_view term) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
        throw parse_error("bad term '" + std::string(term) +
                          "': expected a positive integer, got '" +
                          std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::string_view rest = trim(text);
    if (rest.empty()) return Partition{};
    while (true) {
        size_t comma = rest.find(',');
        std::string_view term = trim(rest.substr(0, comma));
        if (term.empty())
            throw parse_error("empty term in partition text");
        size_t caret = term.find('^');
        int n, m = 1;
        if (caret == std::string_view::npos) {
            n = parse_positive(term, term);
        } else {
            n = parse_positive(term.substr(0, caret), term);
            m = parse_positive(term.substr(caret + 1), term);
        }
        if (!parts.empty() && parts.back() < n)
            throw parse_error("parts increase at term '" + std::string(term) +
                              "'");
        parts.insert(parts.end(), m, n);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw contract_error("partitions_of: d must be nonnegative");
    std::vector<Partition> out;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{d};
    while (true) {
        out.emplace_back(Partition(cur));
        // Next in reverse-lex: decrement the last part >1 and repack the
        // freed cells greedily.
        int k = static_cast<int>(cur.size()) - 1;
        while (k >= 0 && cur[k] == 1) --k;
        if (k < 0) break;
        int rem = 0;
        for (size_t j = k; j < cur.size(); ++j) rem += cur[j];
        int q = cur[k] - 1;
        cur.resize(k);
        while (rem > 0) {
            int t = std::min(q, rem);
            cur.push_back(t);
            rem -= t;
        }
    }
    return out;
}

Partition transpose(const Partition& lambda) {
    const auto& parts = lambda.parts();
    std::vector<int> cols;
    if (!parts.empty()) {
        cols.resize(parts[0]);
        for (int p : parts)
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

std::vector<Node> removable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 == parts.size() || parts[i] > parts[i + 1])
            out.push_back({static_cast<int>(i) + 1, parts[i]});
    }
    return out;
}

Partition remove_node(const Partition& lambda, Node a) {
    auto nodes = removable_nodes(lambda);
    if (std::find(nodes.begin(), nodes.end(), a) == nodes.end())
        throw contract_error("remove_node: node (" + std::to_string(a.row) +
                             "," + std::to_string(a.col) +
                             ") is not removable from " + lambda.str());
    std::vector<int> parts = lambda.parts();
    if (--parts[a.row - 1] == 0) parts.erase(parts.begin() + (a.row - 1));
    return Partition(std::move(parts));
}

Partition add_node(const Partition& lambda, Node a) {
    std::vector<int> parts = lambda.parts();
    if (a.row == lambda.num_parts() + 1 && a.col == 1) {
        parts.push_back(1);
    } else if (a.row >= 1 && a.row <= lambda.num_parts() &&
               a.col == parts[a.row - 1] + 1 &&
               (a.row == 1 || parts[a.row - 2] >= a.col)) {
        ++parts[a.row - 1];
    } else {
        throw contract_error("add_node: node is not addable");
    }
    return Partition(std::move(parts));
}

int node_residue(Node a, int p) {
    if (p < 2) throw contract_error("node_residue: p must be at least 2");
    int r = (a.col - a.row) % p;
    return r < 0 ? r + p : r;
}

std::vector<int> removable_rim_hook_rows(const Partition& lambda, int p) {
    if (p < 2) throw contract_error("rim hooks need p >= 2");
    std::vector<int> out;
    const auto& parts = lambda.parts();
    int t = lambda.num_parts();
    for (int i = 1; i <= t; ++i) {
        // Walk the rim from the hand (i, λ_i): down when the cell below
        // exists, else left. The hook is removable iff the walk survives
        // p cells and its foot has nothing directly below.
        int r = i, c = parts[i - 1], cells = 1;
        bool ok = true;
        while (cells < p) {
            if (r < t && parts[r] >= c) {
                ++r;
            } else if (c > 1) {
                --c;
            } else {
                ok = false;
                break;
            }
            ++cells;
        }
        if (ok && (r == t || parts[r] < c)) out.push_back(i);
    }
    return out;
}

Partition remove_rim_hook(const Partition& lambda, int p, int hand_row) {
    const auto& parts = lambda.parts();
    int t = lambda.num_parts();
    if (hand_row < 1 || hand_row > t)
        throw contract_error("remove_rim_hook: hand row out of range");
    int r = hand_row, c = parts[hand_row - 1], cells = 1;
    while (cells < p) {
        if (r < t && parts[r] >= c) {
            ++r;
        } else if (c > 1) {
            --c;
        } else {
            throw contract_error("remove_rim_hook: no rim " +
                                 std::to_string(p) + "-hook with hand row " +
                                 std::to_string(hand_row));
        }
        ++cells;
    }
    if (r < t && parts[r] >= c)
        throw contract_error("remove_rim_hook: strip foot has a cell below "
                             "it; not removable");
    // Strip between hand row i and foot row r: rows shift up one cell
    // narrower, the foot row is cut at the foot column.
    std::vector<int> out(parts);
    for (int j = hand_row; j < r; ++j) out[j - 1] = parts[j] - 1;
    out[r - 1] = c - 1;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return Partition(std::move(out));
}

CoreWeight p_core_by_stripping(const Partition& lambda, int p) {
    Partition cur = lambda;
    int weight = 0;
    for (;;) {
        auto hands = removable_rim_hook_rows(cur, p);
        if (hands.empty()) break;
        cur = remove_rim_hook(cur, p, hands.back());
        ++weight;
    }
    return {cur, weight};
}

}  // namespace abaci
