#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "abaci/partition.hpp"

using namespace abaci;

namespace {

// Independent partition counter: Euler's pentagonal-number recurrence.
long long partition_count(int n) {
    static std::vector<long long> memo{1};
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            long long sign = (k % 2) ? 1 : -1;
            total += sign * memo[m - g1];
            if (g2 <= m) total += sign * memo[m - g2];
        }
        memo.push_back(total);
    }
    return memo[n];
}

Partition P(const char* text) { return parse_partition(text); }

}  // namespace

TEST_CASE("parse_partition grammar") {
    CHECK(P("20^10,10^5,5^5").num_parts() == 20);
    CHECK(P("20^10,10^5,5^5").size() == 275);
    CHECK(P("3,3,3") == Partition({3, 3, 3}));
    CHECK(P("3,3,3").size() == 9);
    CHECK(P("") == Partition{});
    CHECK(P(" 4 , 2^2 ,1") == Partition({4, 2, 2, 1}));
    CHECK_THROWS_AS(P("3,4"), parse_error);
    CHECK_THROWS_AS(P("0"), parse_error);
    CHECK_THROWS_AS(P("3,,1"), parse_error);
    CHECK_THROWS_AS(P("3^0"), parse_error);
    CHECK_THROWS_AS(P("a"), parse_error);
    CHECK_THROWS_AS(P("3^-1"), parse_error);
}

TEST_CASE("canonical rendering round trips") {
    for (const char* s : {"20^10,10^5,5^5", "3^3", "4,2^2,1", "1"}) {
        CHECK(P(s).str() == s);
        CHECK(parse_partition(P(s).str()) == P(s));
    }
    CHECK(Partition{}.str() == "0");
}

TEST_CASE("partitions_of order and counts") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == P("4"));
    CHECK(p4[1] == P("3,1"));
    CHECK(p4[2] == P("2^2"));
    CHECK(p4[3] == P("2,1^2"));
    CHECK(p4[4] == P("1^4"));

    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    CHECK(partition_count(50) == 204226);
    CHECK(partitions_of(50).size() == 204226);
    for (int d = 0; d <= 30; ++d)
        CHECK(static_cast<long long>(partitions_of(d).size()) ==
              partition_count(d));
}

TEST_CASE("partitions_of yields distinct valid partitions") {
    for (int d : {7, 12}) {
        std::set<std::vector<int>> seen;
        for (const auto& lam : partitions_of(d)) {
            CHECK(lam.size() == d);
            CHECK(seen.insert(lam.parts()).second);
        }
    }
}

TEST_CASE("transpose") {
    CHECK(transpose(P("3,1")) == P("2,1,1"));
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(P("20^10,10^5,5^5")) == P("20^5,15^5,10^10"));
    for (int d = 0; d <= 30; ++d)
        for (const auto& lam : partitions_of(d))
            CHECK(transpose(transpose(lam)) == lam);
}

TEST_CASE("removable nodes") {
    CHECK(removable_nodes(P("3,3,2")) ==
          std::vector<Node>{{2, 3}, {3, 2}});
    CHECK(removable_nodes(P("3,3,3")) == std::vector<Node>{{3, 3}});
    CHECK(removable_nodes(Partition{}).empty());
    for (int d = 1; d <= 20; ++d)
        for (const auto& lam : partitions_of(d)) {
            std::set<int> distinct(lam.parts().begin(), lam.parts().end());
            CHECK(removable_nodes(lam).size() == distinct.size());
        }
}

TEST_CASE("remove_node and add_node") {
    CHECK(remove_node(P("3,3,3"), {3, 3}) == P("3,3,2"));
    CHECK(remove_node(P("3,1"), {2, 1}) == P("3"));
    CHECK_THROWS_AS(remove_node(P("3,3,2"), Node{1, 3}), contract_error);

    for (int d = 1; d <= 20; ++d)
        for (const auto& lam : partitions_of(d))
            for (Node a : removable_nodes(lam))
                CHECK(add_node(remove_node(lam, a), a) == lam);
}

TEST_CASE("node residue") {
    CHECK(node_residue({3, 3}, 3) == 0);
    CHECK(node_residue({2, 3}, 3) == 1);
    CHECK(node_residue({3, 2}, 3) == 2);
    CHECK(node_residue({5, 1}, 2) == 0);
}

TEST_CASE("rim-hook stripping oracle") {
    CHECK(p_core_by_stripping(P("3,3,3"), 3) == CoreWeight{Partition{}, 3});
    CHECK(p_core_by_stripping(P("2,1"), 2) == CoreWeight{P("2,1"), 0});
    CHECK(p_core_by_stripping(P("3,3,2"), 3) == CoreWeight{P("3,1,1"), 1});
    CHECK(p_core_by_stripping(Partition{}, 5) == CoreWeight{Partition{}, 0});
}

TEST_CASE("stripping invariants") {
    for (int d = 1; d <= 18; ++d)
        for (const auto& lam : partitions_of(d))
            for (int p : {2, 3, 5}) {
                auto cw = p_core_by_stripping(lam, p);
                CHECK(removable_rim_hook_rows(cw.core, p).empty());
                CHECK(lam.size() - cw.core.size() == p * cw.weight);
            }
}

TEST_CASE("stripping is order-independent") {
    std::mt19937 rng(20081107);
    for (int d = 1; d <= 18; ++d)
        for (const auto& lam : partitions_of(d))
            for (int p : {2, 3, 5}) {
                auto expected = p_core_by_stripping(lam, p);
                for (int trial = 0; trial < 20; ++trial) {
                    Partition cur = lam;
                    int weight = 0;
                    for (;;) {
                        auto hands = removable_rim_hook_rows(cur, p);
                        if (hands.empty()) break;
                        std::uniform_int_distribution<size_t> pick(
                            0, hands.size() - 1);
                        cur = remove_rim_hook(cur, p, hands[pick(rng)]);
                        ++weight;
                    }
                    CHECK(cur == expected.core);
                    CHECK(weight == expected.weight);
                }
            }
}
