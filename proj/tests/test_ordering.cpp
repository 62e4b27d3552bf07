#include <doctest.h>

#include <algorithm>

#include "sdnroute/ordering.hpp"
#include "support/test_util.hpp"

using namespace sdnroute;
using namespace testutil;

namespace {

std::vector<DemandId> ids_of(const std::vector<Demand>& demands) {
    std::vector<DemandId> ids;
    for (const Demand& d : demands) ids.push_back(d.id);
    return ids;
}

Demand bh(DemandId id, Bandwidth band, std::int64_t hop) { return make_demand(id, 0, 1, band, 100, hop); }

}  // namespace

TEST_CASE("rule 1 orders by band, then smaller hop") {
    CHECK(rule_precedes(SortRule::Rule1, bh(0, 5000, 4), bh(1, 3000, 2)));
    CHECK_FALSE(rule_precedes(SortRule::Rule1, bh(1, 3000, 2), bh(0, 5000, 4)));
    CHECK(rule_precedes(SortRule::Rule1, bh(0, 5000, 2), bh(1, 5000, 4)));
}

TEST_CASE("rule 2 orders by smaller hop, then band") {
    CHECK(rule_precedes(SortRule::Rule2, bh(0, 1000, 2), bh(1, 9000, 3)));
    CHECK(rule_precedes(SortRule::Rule2, bh(0, 9000, 2), bh(1, 1000, 2)));
}

TEST_CASE("rule 4 orders by hop*band ascending") {
    CHECK(rule_precedes(SortRule::Rule4, bh(0, 1000, 3), bh(1, 2000, 2)));  // 3000 < 4000
    CHECK_FALSE(rule_precedes(SortRule::Rule4, bh(1, 2000, 2), bh(0, 1000, 3)));
}

TEST_CASE("rule 3 example with ratio ties broken by id") {
    std::vector<Demand> demands{bh(0, 4000, 4), bh(1, 3000, 2), bh(2, 1000, 1)};
    // ratios: 1000, 1500, 1000 -> id 1 first, then ids 0 and 2 by id
    CHECK(ids_of(order_demands(SortRule::Rule3, demands)) == std::vector<DemandId>{1, 0, 2});
}

TEST_CASE("no sorting preserves input order; empty lists pass through") {
    std::vector<Demand> demands{bh(3, 1, 9), bh(1, 100, 1), bh(2, 50, 2)};
    CHECK(ids_of(order_demands(SortRule::NoSorting, demands)) == std::vector<DemandId>{3, 1, 2});
    for (SortRule rule : {SortRule::Rule1, SortRule::Rule2, SortRule::Rule3, SortRule::Rule4})
        CHECK(order_demands(rule, {}).empty());
}

TEST_CASE("ordering is a permutation satisfying the rule with id tie-breaks") {
    Rng rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Demand> demands;
        int n = static_cast<int>(rng.uniform_int(0, 12));
        for (int i = 0; i < n; ++i)
            demands.push_back(bh(static_cast<DemandId>(i), rng.uniform_int(1, 6), rng.uniform_int(1, 5)));
        rng.shuffle(demands);

        for (SortRule rule : {SortRule::Rule1, SortRule::Rule2, SortRule::Rule3, SortRule::Rule4}) {
            std::vector<Demand> sorted = order_demands(rule, demands);
            REQUIRE(sorted.size() == demands.size());

            std::vector<DemandId> in = ids_of(demands), out = ids_of(sorted);
            std::sort(in.begin(), in.end());
            std::sort(out.begin(), out.end());
            CHECK(in == out);  // permutation

            for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
                // The successor never strictly precedes, and equal keys are in
                // ascending id order.
                CHECK_FALSE(rule_precedes(rule, sorted[i + 1], sorted[i]));
                if (!rule_precedes(rule, sorted[i], sorted[i + 1]))
                    CHECK(sorted[i].id < sorted[i + 1].id);
            }
        }
    }
}

TEST_CASE("rule output is invariant under uniform band scaling") {
    Rng rng(4242);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Demand> demands;
        int n = static_cast<int>(rng.uniform_int(1, 10));
        for (int i = 0; i < n; ++i)
            demands.push_back(bh(static_cast<DemandId>(i), rng.uniform_int(1, 9), rng.uniform_int(1, 5)));

        std::vector<Demand> scaled = demands;
        for (Demand& d : scaled) d.band *= 1000;

        for (SortRule rule : {SortRule::Rule1, SortRule::Rule2, SortRule::Rule3, SortRule::Rule4})
            CHECK(ids_of(order_demands(rule, demands)) == ids_of(order_demands(rule, scaled)));
    }
}
