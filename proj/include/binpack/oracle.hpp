#ifndef BINPACK_ORACLE_HPP
#define BINPACK_ORACLE_HPP

#include <array>
#include <optional>
#include <vector>

#include "binpack/core.hpp"
#include "binpack/heuristics.hpp"

namespace binpack {

// Exact fraction for ratio and bound checks. 17/10 and 11/9 have no finite
// binary representation, and the checks live right on the bound line, so
// everything is compared by cross-multiplication in 64-bit integers. The
// operands here (bin counts, single-digit multipliers) keep that far from
// overflow.
struct Rational {
    long long num = 0;
    long long den = 1; // > 0 and coprime with num after of()

    static Rational of(long long num, long long den);

    friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

std::string to_string(const Rational& r); // "5/3", or "2" for whole values

// One worst-case guarantee: heuristic_bins {< or ≤} multiplier·opt + additive.
struct BoundClaim {
    HeuristicId heuristic;
    Rational multiplier;
    int additive;
    bool strict; // true: <, false: ≤
};

// The three guarantees this project checks empirically:
//   FF  < 17/10·OPT + 2   FFD < 11/9·OPT + 4   NF ≤ 2·OPT.
const std::array<BoundClaim, 3>& worst_case_claims();

struct BoundVerdict {
    bool holds;
    Rational margin; // amount the count sits above the bound line; 0 when it holds
};

BoundVerdict check_bound(const BoundClaim& claim, int heuristic_bins, int opt_bins);

// Minimum bin count by branch and bound, usable for small instances only;
// empty when item_count exceeds item_limit (the caller should skip, this is
// not an error).
std::optional<int> exact_opt(const ProblemInstance& inst, int item_limit = 18);

// One sample of the Next-Fit worst-case family: the alternating (big, tiny)
// instance of parameter n, Next-Fit's bin count on it, the true optimum for
// the family, and their exact ratio.
struct NfRatioPoint {
    int n;
    int nf_bins;
    int opt_bins;
    Rational ratio;
};

// Requires every n ≥ 2. The ratio approaches 2 from below as n grows.
std::vector<NfRatioPoint> nf_ratio_curve(const std::vector<int>& n_values);

} // namespace binpack

#endif
