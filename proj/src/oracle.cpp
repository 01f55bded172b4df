#include "binpack/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "binpack/bench.hpp"

namespace binpack {

namespace {

// Depth-first search over bin assignments, items heaviest first. Bins are
// distinguishable only by load, and a new bin is always the next unopened
// one, which kills the bin-permutation symmetry.
class OptSearch {
public:
    OptSearch(std::vector<int> weights_desc, int capacity, int incumbent, int floor)
        : capacity_(capacity), best_(incumbent), floor_(floor), weights_(std::move(weights_desc)) {
        suffix_.assign(weights_.size() + 1, 0);
        for (std::size_t i = weights_.size(); i-- > 0;)
            suffix_[i] = suffix_[i + 1] + weights_[i];
        loads_.reserve(weights_.size());
    }

    int solve() {
        dfs(0);
        return best_;
    }

private:
    void dfs(std::size_t item) {
        if (best_ == floor_) return; // cannot beat the lower bound
        if (item == weights_.size()) {
            best_ = std::min<int>(best_, static_cast<int>(loads_.size()));
            return;
        }

        // Even a perfect packing of the remaining weight into the open bins'
        // free space plus fresh bins cannot land below this many bins.
        long long free = 0;
        for (int load : loads_) free += capacity_ - load;
        long long overflow = suffix_[item] - free;
        long long projected = static_cast<long long>(loads_.size());
        if (overflow > 0) projected += (overflow + capacity_ - 1) / capacity_;
        if (projected >= best_) return;

        const int w = weights_[item];

        // A perfect fit is always safe to commit to: any solution placing
        // this item elsewhere can swap it with that bin's future content.
        for (std::size_t j = 0; j < loads_.size(); ++j) {
            if (loads_[j] + w == capacity_) {
                loads_[j] += w;
                dfs(item + 1);
                loads_[j] -= w;
                return;
            }
        }

        for (std::size_t j = 0; j < loads_.size(); ++j) {
            if (loads_[j] + w > capacity_) continue;
            bool duplicate_load = false; // bins of equal load are interchangeable
            for (std::size_t k = 0; k < j && !duplicate_load; ++k)
                duplicate_load = loads_[k] == loads_[j];
            if (duplicate_load) continue;
            loads_[j] += w;
            dfs(item + 1);
            loads_[j] -= w;
        }

        loads_.push_back(w);
        dfs(item + 1);
        loads_.pop_back();
    }

    int capacity_;
    int best_;
    int floor_;
    std::vector<int> weights_;
    std::vector<long long> suffix_;
    std::vector<int> loads_;
};

} // namespace

Rational Rational::of(long long num, long long den) {
    assert(den != 0);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

const std::array<BoundClaim, 3>& worst_case_claims() {
    static const std::array<BoundClaim, 3> claims = {{
        {HeuristicId::FF, Rational::of(17, 10), 2, true},
        {HeuristicId::FFD, Rational::of(11, 9), 4, true},
        {HeuristicId::NF, Rational::of(2, 1), 0, false},
    }};
    return claims;
}

BoundVerdict check_bound(const BoundClaim& claim, int heuristic_bins, int opt_bins) {
    // heuristic_bins vs multiplier·opt + additive, cross-multiplied by den.
    const long long lhs = static_cast<long long>(heuristic_bins) * claim.multiplier.den;
    const long long rhs =
        claim.multiplier.num * opt_bins + static_cast<long long>(claim.additive) * claim.multiplier.den;
    const bool holds = claim.strict ? lhs < rhs : lhs <= rhs;
    if (holds) return {true, Rational::of(0, 1)};
    return {false, Rational::of(lhs - rhs, claim.multiplier.den)};
}

std::optional<int> exact_opt(const ProblemInstance& inst, int item_limit) {
    if (inst.item_count() > item_limit) return std::nullopt;
    if (inst.item_count() == 0) return 0;

    const int incumbent = first_fit_decreasing(inst).bin_count();
    const int floor = lower_bound(inst).l1;
    if (incumbent == floor) return incumbent;

    std::vector<int> weights = inst.weights;
    std::sort(weights.begin(), weights.end(), std::greater<>());
    return OptSearch(std::move(weights), inst.capacity, incumbent, floor).solve();
}

std::vector<NfRatioPoint> nf_ratio_curve(const std::vector<int>& n_values) {
    std::vector<NfRatioPoint> curve;
    curve.reserve(n_values.size());
    for (int n : n_values) {
        if (n < 2) throw std::invalid_argument("nf_ratio_curve requires n >= 2");
        const ProblemInstance inst = generate(nf_adversarial_spec(n));
        const int nf_bins = next_fit(inst).bin_count();
        // Big items pair up into full bins; with n odd the unpaired big item
        // shares a bin with all n tiny items (n + n·1 = capacity exactly).
        const int opt_bins = n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2;
        curve.push_back({n, nf_bins, opt_bins, Rational::of(nf_bins, opt_bins)});
    }
    return curve;
}

} // namespace binpack
