#ifndef BINPACK_HEURISTICS_HPP
#define BINPACK_HEURISTICS_HPP

#include <array>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include "binpack/core.hpp"

namespace binpack {

// The fourteen packing strategies exposed on the command line. Names follow
// the usual shorthand: a trailing + marks a faster drop-in variant that keeps
// the same packing behaviour.
enum class HeuristicId {
    NF,
    NFD,
    NFD_PLUS,
    FF,
    FF_PLUS,
    FF_PLUS_PLUS,
    FFD,
    FFD_PLUS,
    FFD_PLUS_PLUS,
    MR,
    MR_PLUS,
    BF,
    BF_HEAP,
    BF_LOOKUP,
};

inline constexpr std::array<HeuristicId, 14> kAllHeuristics = {
    HeuristicId::NF,       HeuristicId::NFD,      HeuristicId::NFD_PLUS,      HeuristicId::FF,
    HeuristicId::FF_PLUS,  HeuristicId::FF_PLUS_PLUS, HeuristicId::FFD,       HeuristicId::FFD_PLUS,
    HeuristicId::FFD_PLUS_PLUS, HeuristicId::MR,  HeuristicId::MR_PLUS,       HeuristicId::BF,
    HeuristicId::BF_HEAP,  HeuristicId::BF_LOOKUP,
};

// Display names: NF, NFD, NFD+, FF, FF+, FF++, FFD, FFD+, FFD++, MR, MR+,
// BF, BF-heap, BF++.
std::string_view to_string(HeuristicId id);
std::optional<HeuristicId> heuristic_from_name(std::string_view name);

// How the decreasing variants obtain their descending item order. Both yield
// a non-increasing weight sequence; they may order equal weights differently,
// so bin counts match but assignments need not.
enum class SortKind {
    reference, // comparison sort (heapsort), O(n log n)
    counting,  // stable counting sort over [1, capacity], O(n + capacity)
};

enum class FirstFitVariant {
    naive,      // rescan every bin from the start
    compacting, // additionally drop bins that cannot take any further item
    lookup,     // additionally skip a provably unusable prefix of bins
};

enum class MaxRestVariant {
    naive,          // linear scan for the emptiest bin
    priority_queue, // heap ordered by (remaining desc, bin index asc)
};

enum class BestFitVariant {
    naive,        // linear scan for the fullest bin that still fits
    heap,         // max-heap on remaining capacity, pruned tree search
    lookup_table, // per-remaining-capacity bin queues, O(n · capacity)
};

// Whether bins with remaining capacity below the instance's minimum weight
// are retired from the open set. Never changes the resulting packing; it
// only shrinks the data the optimized variants have to touch.
// variant_default enables it for the variants that exist to be fast
// (compacting/lookup first-fit, priority-queue max-rest) and disables it for
// the reference scans. The best-fit lookup table ignores the flag: its
// queries start at the item weight and never reach slots below the minimum.
enum class BinClosing {
    variant_default,
    disabled,
    enabled,
};

// One open bin as tracked by the scan-based engines. `index` is the bin's
// ordinal in the output packing.
struct OpenBin {
    int index;
    int used;
    int remaining;
};

// Removes exactly the bins with used > threshold, preserving the relative
// order of the survivors. threshold = capacity − minimum item weight, so a
// removed bin has remaining < every future item.
std::vector<OpenBin> close_full_bins(int threshold, std::vector<OpenBin> bins);

// Prefix-maximum map over the weight domain [1, capacity]: record that a bin
// index accepted a weight, query the highest index recorded for any weight
// ≤ w. Both operations are O(log capacity). Once some bin j took an item of
// weight w' ≤ w, every bin before j has remaining < w' ≤ w, so a first-fit
// scan for w may start at j.
class StartIndexMap {
public:
    explicit StartIndexMap(int capacity);

    void record(int weight, int bin_index);
    int query(int weight) const; // 0 when nothing relevant was recorded

private:
    std::vector<int> tree_;
};

// Best-fit bookkeeping: counts_[r] = number of bins with remaining capacity
// exactly r, plus a FIFO queue of their ordinals. All item_count potentially
// needed bins start in the full-capacity slot, queued in ordinal order, so
// bins enter use oldest-first and the used ordinals always form a prefix.
class CapacityTable {
public:
    CapacityTable(int capacity, int item_count);

    // Moves the best-fitting bin (smallest remaining ≥ weight, oldest first)
    // to its new slot and returns its ordinal; -1 if nothing fits.
    int take_best(int weight);

    int count_at(int remaining) const;
    int used_bins() const; // bins with remaining < capacity
    int capacity() const { return capacity_; }

private:
    int capacity_;
    std::vector<int> counts_;
    std::vector<std::deque<int>> queues_;
};

Packing next_fit(const ProblemInstance& inst);
Packing next_fit_decreasing(const ProblemInstance& inst, SortKind sort = SortKind::counting);
Packing first_fit(const ProblemInstance& inst, FirstFitVariant variant = FirstFitVariant::naive,
                  BinClosing closing = BinClosing::variant_default);
Packing first_fit_decreasing(const ProblemInstance& inst, FirstFitVariant variant = FirstFitVariant::naive,
                             SortKind sort = SortKind::counting,
                             BinClosing closing = BinClosing::variant_default);
Packing max_rest(const ProblemInstance& inst, MaxRestVariant variant = MaxRestVariant::naive,
                 BinClosing closing = BinClosing::variant_default);
Packing best_fit(const ProblemInstance& inst, BestFitVariant variant = BestFitVariant::naive,
                 BinClosing closing = BinClosing::variant_default);

// Runs the named strategy with its canonical settings (decreasing variants
// pick their table-given sort; closing follows variant_default).
Packing run_heuristic(const ProblemInstance& inst, HeuristicId id);

} // namespace binpack

#endif
