#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "abaci/block.hpp"
#include "abaci/serialize.hpp"
#include "abaci/theorems.hpp"

using namespace abaci;

namespace {
Partition P(const char* text) { return parse_partition(text); }
}

TEST_CASE("block descriptor") {
    CHECK(block_descriptor(P("3,3,3"), 3) ==
          BlockDescriptor{3, Partition{}, 3});
    CHECK(block_descriptor(P("2,1"), 2) == BlockDescriptor{2, P("2,1"), 0});
    CHECK(block_descriptor(Partition{}, 5) ==
          BlockDescriptor{5, Partition{}, 0});
    CHECK(block_descriptor(P("3,3,3"), 3).degree() == 9);
}

TEST_CASE("same_block") {
    CHECK(same_block(P("3,3,2"), P("6,1,1"), 3));
    CHECK_FALSE(same_block(P("3,3,2"), P("2,2,2,2"), 3));
    CHECK(same_block(P("3,3,2"), P("3,3,2"), 3));
    CHECK_THROWS_AS(same_block(P("3,3,2"), P("3,1"), 3), contract_error);
}

TEST_CASE("blocks partition the partitions of d") {
    for (int d = 1; d <= 15; ++d)
        for (int p : {2, 3}) {
            auto all = partitions_of(d);
            // grouping by core must reproduce the same_block relation
            for (const auto& a : all)
                for (const auto& b : all)
                    CHECK(same_block(a, b, p) ==
                          (p_core(a, p) == p_core(b, p)));
            std::map<std::vector<int>, std::vector<const Partition*>> classes;
            for (const auto& lam : all)
                classes[p_core(lam, p).parts()].push_back(&lam);
            for (const auto& [core, members] : classes) {
                int w = p_weight(*members[0], p);
                if (w == 0) {
                    CHECK(members.size() == 1);
                    CHECK(members[0]->parts() == core);
                }
            }
        }
}

TEST_CASE("defect p-rank") {
    CHECK(defect_p_rank({3, Partition{}, 3}) == 3);
    CHECK(defect_p_rank({2, P("2,1"), 0}) == 0);
    CHECK(defect_p_rank({5, Partition{}, 55}) == 55);
}

TEST_CASE("restriction factors") {
    CHECK(restriction_factors(P("3,3,3")) ==
          std::vector<Partition>{P("3,3,2")});
    // removable_nodes order: (2,3) before (3,2)
    CHECK(restriction_factors(P("3,3,2")) ==
          std::vector<Partition>{P("3,2,2"), P("3,3,1")});
    CHECK(restriction_factors(P("1")) == std::vector<Partition>{Partition{}});
    CHECK_THROWS_AS(restriction_factors(Partition{}), contract_error);

    for (int d = 1; d <= 15; ++d)
        for (const auto& lam : partitions_of(d)) {
            auto factors = restriction_factors(lam);
            std::set<std::vector<int>> distinct;
            for (const auto& f : factors) {
                CHECK(f.size() == lam.size() - 1);
                CHECK(distinct.insert(f.parts()).second);
            }
        }
}

TEST_CASE("pxp restrictions all land in weight w-2") {
    for (int d : {4, 8, 12, 16}) {
        for (const auto& lam : partitions_of(d)) {
            if (!is_p_by_p(lam, 2)) continue;
            int w = p_weight(lam, 2);
            for (const auto& f : restriction_factors(lam))
                CHECK(p_weight(f, 2) == w - 2);
        }
    }
    for (const auto& f : restriction_factors(P("3,3,3")))
        CHECK(p_weight(f, 3) == 1);
}

TEST_CASE("complexity upper bound") {
    CHECK(complexity_upper_bound(P("3,3,3"), 3) == 2);
    CHECK(complexity_upper_bound(P("3,1"), 2) == 2);
    CHECK(complexity_upper_bound(P("4,4"), 2) == 3);
    CHECK(complexity_upper_bound(Partition{}, 3) == 0);

    for (int d = 1; d <= 16; ++d)
        for (const auto& lam : partitions_of(d))
            for (int p : {2, 3}) {
                int bound = complexity_upper_bound(lam, p);
                int rank = defect_p_rank(block_descriptor(lam, p));
                CHECK(bound <= rank);
                CHECK((bound < rank) == is_p_by_p(lam, p));
            }
}

TEST_CASE("block descriptor json") {
    nlohmann::json j = block_descriptor(P("3,3,2"), 3);
    CHECK(j["p"] == 3);
    CHECK(j["core"] == nlohmann::json({3, 1, 1}));
    CHECK(j["weight"] == 1);
}
