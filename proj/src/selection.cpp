#include "sdnroute/selection.hpp"

#include <algorithm>

#include "sdnroute/rng.hpp"

namespace sdnroute {

namespace {

// Little-endian base-2^64 unsigned integer; just enough arithmetic to compare
// sums of reciprocals exactly.
struct BigUint {
    std::vector<std::uint64_t> limbs;

    static BigUint one() { return {{1}}; }

    void trim() {
        while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    }

    void mul_small(std::uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& limb : limbs) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        while (carry) {
            limbs.push_back(static_cast<std::uint64_t>(carry));
            carry >>= 64;
        }
    }

    void add(const BigUint& other) {
        if (limbs.size() < other.limbs.size()) limbs.resize(other.limbs.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs.size(); ++i) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limbs[i]) + carry;
            if (i < other.limbs.size()) cur += other.limbs[i];
            limbs[i] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry) limbs.push_back(static_cast<std::uint64_t>(carry));
    }

    BigUint mul(const BigUint& other) const {
        BigUint out;
        if (limbs.empty() || other.limbs.empty()) return out;
        out.limbs.assign(limbs.size() + other.limbs.size(), 0);
        for (std::size_t i = 0; i < limbs.size(); ++i) {
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < other.limbs.size(); ++j) {
                unsigned __int128 cur = static_cast<unsigned __int128>(limbs[i]) * other.limbs[j] +
                                        out.limbs[i + j] + carry;
                out.limbs[i + j] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
            }
            std::size_t k = i + other.limbs.size();
            while (carry) {
                unsigned __int128 cur = static_cast<unsigned __int128>(out.limbs[k]) + carry;
                out.limbs[k] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
                ++k;
            }
        }
        out.trim();
        return out;
    }

    int compare(const BigUint& other) const {
        if (limbs.size() != other.limbs.size()) return limbs.size() < other.limbs.size() ? -1 : 1;
        for (std::size_t i = limbs.size(); i-- > 0;) {
            if (limbs[i] != other.limbs[i]) return limbs[i] < other.limbs[i] ? -1 : 1;
        }
        return 0;
    }
};

// sum(1/v_i) as numerator/denominator: den = prod(v), num = sum of products
// excluding one term each.
void reciprocal_sum(const std::vector<Bandwidth>& values, BigUint& num, BigUint& den) {
    den = BigUint::one();
    for (Bandwidth v : values) den.mul_small(static_cast<std::uint64_t>(v));
    num = BigUint{};
    for (std::size_t skip = 0; skip < values.size(); ++skip) {
        BigUint term = BigUint::one();
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i != skip) term.mul_small(static_cast<std::uint64_t>(values[i]));
        }
        num.add(term);
    }
}

struct Entry {
    const Path* path;
    double weight;
    std::size_t position;
    std::vector<Bandwidth> residuals;  // filled only for exact comparison
};

std::vector<Entry> bandwidth_filter(const ResidualState& residual, const Demand& demand,
                                    const CandidateSet& candidates, bool keep_residuals) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < candidates.paths.size(); ++i) {
        const Path& p = candidates.paths[i];
        bool fits = true;
        for (EdgeId e : p.edges) {
            if (residual.residual(e) < demand.band) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        Entry entry{&p, path_weight(residual, p), i, {}};
        if (keep_residuals) {
            entry.residuals.reserve(p.edges.size());
            for (EdgeId e : p.edges) entry.residuals.push_back(residual.residual(e));
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

bool structural_less(const Entry& a, const Entry& b) {
    if (a.path->hop() != b.path->hop()) return a.path->hop() < b.path->hop();
    if (a.path->total_delay != b.path->total_delay) return a.path->total_delay < b.path->total_delay;
    return a.position < b.position;
}

RankedCandidates to_ranked(DemandId demand, std::vector<Entry> entries) {
    RankedCandidates ranked;
    ranked.demand = demand;
    ranked.paths.reserve(entries.size());
    for (Entry& e : entries) ranked.paths.emplace_back(*e.path, e.weight);
    return ranked;
}

}  // namespace

double path_weight(const ResidualState& residual, const Path& path) {
    double w = 0.0;
    for (EdgeId e : path.edges) {
        Bandwidth r = residual.residual(e);
        if (r <= 0)
            throw ZeroResidualError("path_weight on saturated edge " + std::to_string(e));
        w += 1.0 / static_cast<double>(r);
    }
    return w;
}

int compare_reciprocal_sums(const std::vector<Bandwidth>& a, const std::vector<Bandwidth>& b) {
    for (Bandwidth v : a)
        if (v <= 0) throw ZeroResidualError("compare_reciprocal_sums: non-positive value");
    for (Bandwidth v : b)
        if (v <= 0) throw ZeroResidualError("compare_reciprocal_sums: non-positive value");
    BigUint num_a, den_a, num_b, den_b;
    reciprocal_sum(a, num_a, den_a);
    reciprocal_sum(b, num_b, den_b);
    return num_a.mul(den_b).compare(num_b.mul(den_a));
}

RankedCandidates select_and_rank(const ResidualState& residual, const Demand& demand,
                                 const CandidateSet& candidates, bool exact_weights) {
    std::vector<Entry> entries = bandwidth_filter(residual, demand, candidates, exact_weights);
    if (exact_weights) {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            int cmp = compare_reciprocal_sums(a.residuals, b.residuals);
            if (cmp != 0) return cmp < 0;
            return structural_less(a, b);
        });
    } else {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            if (a.weight != b.weight) return a.weight < b.weight;
            return structural_less(a, b);
        });
    }
    return to_ranked(demand.id, std::move(entries));
}

RankedCandidates alt_select(const ResidualState& residual, const Demand& demand,
                            const CandidateSet& candidates, SelectionStrategy strategy,
                            std::uint64_t seed) {
    if (strategy == SelectionStrategy::Weight)
        return select_and_rank(residual, demand, candidates);

    std::vector<Entry> entries = bandwidth_filter(residual, demand, candidates, false);
    switch (strategy) {
        case SelectionStrategy::MinHop:
            std::sort(entries.begin(), entries.end(), structural_less);
            break;
        case SelectionStrategy::MinDelay:
            std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
                if (a.path->total_delay != b.path->total_delay)
                    return a.path->total_delay < b.path->total_delay;
                if (a.path->hop() != b.path->hop()) return a.path->hop() < b.path->hop();
                return a.position < b.position;
            });
            break;
        case SelectionStrategy::Random: {
            Rng rng(seed);
            rng.shuffle(entries);
            break;
        }
        case SelectionStrategy::Weight:
            break;
    }
    return to_ranked(demand.id, std::move(entries));
}

const char* to_string(SelectionStrategy strategy) {
    switch (strategy) {
        case SelectionStrategy::Weight: return "weight";
        case SelectionStrategy::MinHop: return "min-hop";
        case SelectionStrategy::MinDelay: return "min-delay";
        case SelectionStrategy::Random: return "random";
    }
    return "?";
}

}  // namespace sdnroute
