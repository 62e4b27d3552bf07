#include "sdnroute/ordering.hpp"

#include <algorithm>

namespace sdnroute {

namespace {

using Wide = __int128;

// band_a/hop_a vs band_b/hop_b, hop > 0.
int compare_ratio(const Demand& a, const Demand& b) {
    Wide lhs = static_cast<Wide>(a.band) * b.hop_limit;
    Wide rhs = static_cast<Wide>(b.band) * a.hop_limit;
    if (lhs != rhs) return lhs < rhs ? -1 : 1;
    return 0;
}

}  // namespace

bool rule_precedes(SortRule rule, const Demand& a, const Demand& b) {
    switch (rule) {
        case SortRule::Rule1:
            if (a.band != b.band) return a.band > b.band;
            return a.hop_limit < b.hop_limit;  // larger 1/hop first
        case SortRule::Rule2:
            if (a.hop_limit != b.hop_limit) return a.hop_limit < b.hop_limit;
            return a.band > b.band;
        case SortRule::Rule3:
            return compare_ratio(a, b) > 0;
        case SortRule::Rule4: {
            Wide ka = static_cast<Wide>(a.hop_limit) * a.band;
            Wide kb = static_cast<Wide>(b.hop_limit) * b.band;
            return ka < kb;
        }
        case SortRule::NoSorting:
            return false;
    }
    return false;
}

std::vector<Demand> order_demands(SortRule rule, const std::vector<Demand>& demands) {
    std::vector<Demand> out = demands;
    if (rule == SortRule::NoSorting) return out;
    std::sort(out.begin(), out.end(), [rule](const Demand& a, const Demand& b) {
        if (rule_precedes(rule, a, b)) return true;
        if (rule_precedes(rule, b, a)) return false;
        return a.id < b.id;
    });
    return out;
}

const char* to_string(SortRule rule) {
    switch (rule) {
        case SortRule::Rule1: return "rule1";
        case SortRule::Rule2: return "rule2";
        case SortRule::Rule3: return "rule3";
        case SortRule::Rule4: return "rule4";
        case SortRule::NoSorting: return "none";
    }
    return "?";
}

}  // namespace sdnroute
