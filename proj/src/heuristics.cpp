#include "binpack/heuristics.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <span>
#include <utility>

namespace binpack {

namespace {

struct NameEntry {
    std::string_view name;
    HeuristicId id;
};

constexpr std::array<NameEntry, 14> kNames = {{
    {"NF", HeuristicId::NF},
    {"NFD", HeuristicId::NFD},
    {"NFD+", HeuristicId::NFD_PLUS},
    {"FF", HeuristicId::FF},
    {"FF+", HeuristicId::FF_PLUS},
    {"FF++", HeuristicId::FF_PLUS_PLUS},
    {"FFD", HeuristicId::FFD},
    {"FFD+", HeuristicId::FFD_PLUS},
    {"FFD++", HeuristicId::FFD_PLUS_PLUS},
    {"MR", HeuristicId::MR},
    {"MR+", HeuristicId::MR_PLUS},
    {"BF", HeuristicId::BF},
    {"BF-heap", HeuristicId::BF_HEAP},
    {"BF++", HeuristicId::BF_LOOKUP},
}};

bool resolve_closing(BinClosing closing, bool variant_default) {
    switch (closing) {
    case BinClosing::disabled: return false;
    case BinClosing::enabled: return true;
    case BinClosing::variant_default: break;
    }
    return variant_default;
}

// Item order for the decreasing variants, heaviest first. The counting path
// is stable within equal weights; the heapsort path orders ties however the
// heap happens to emit them, which is why the decreasing variants only
// promise equal bin counts across sort kinds, not identical assignments.
std::vector<int> sorted_indices_desc(const ProblemInstance& inst, SortKind sort) {
    std::vector<int> order(inst.weights.size());
    std::iota(order.begin(), order.end(), 0);

    if (sort == SortKind::counting) {
        std::vector<std::vector<int>> buckets(static_cast<std::size_t>(inst.capacity) + 1);
        for (int i = 0; i < inst.item_count(); ++i)
            buckets[static_cast<std::size_t>(inst.weights[static_cast<std::size_t>(i)])].push_back(i);
        order.clear();
        for (int w = inst.capacity; w >= 1; --w)
            order.insert(order.end(), buckets[static_cast<std::size_t>(w)].begin(),
                         buckets[static_cast<std::size_t>(w)].end());
    } else {
        auto heavier_first = [&](int a, int b) {
            return inst.weights[static_cast<std::size_t>(a)] > inst.weights[static_cast<std::size_t>(b)];
        };
        std::make_heap(order.begin(), order.end(), heavier_first);
        std::sort_heap(order.begin(), order.end(), heavier_first);
    }
    return order;
}

std::vector<int> identity_order(const ProblemInstance& inst) {
    std::vector<int> order(inst.weights.size());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// Shared open-bin bookkeeping for the scan-based engines. Bins that can no
// longer accept any item stay in the array (their fit check always fails)
// until enough accumulate to be worth compacting away; compaction preserves
// the relative order of the survivors, so scan semantics never change.
class OpenBinArray {
public:
    OpenBinArray(int capacity, int min_weight, bool close)
        : close_(close), threshold_(capacity - min_weight) {}

    std::vector<OpenBin>& bins() { return bins_; }

    void add(OpenBin bin) {
        if (close_ && bin.used > threshold_) return;
        bins_.push_back(bin);
    }

    void on_packed(const OpenBin& bin) {
        if (close_ && bin.used > threshold_) {
            ++closable_;
            if (closable_ * 2 > static_cast<int>(bins_.size())) {
                bins_ = close_full_bins(threshold_, std::move(bins_));
                closable_ = 0;
            }
        }
    }

private:
    bool close_;
    int threshold_;
    int closable_ = 0;
    std::vector<OpenBin> bins_;
};

Packing first_fit_impl(const ProblemInstance& inst, std::span<const int> order, bool use_lookup, bool close) {
    Packing result;
    result.capacity = inst.capacity;

    OpenBinArray open(inst.capacity, inst.min_weight(), close);
    StartIndexMap lookup(use_lookup ? inst.capacity : 0);

    for (int item : order) {
        const int w = inst.weights[static_cast<std::size_t>(item)];
        auto& bins = open.bins();

        auto scan = bins.begin();
        if (use_lookup) {
            const int start = lookup.query(w);
            scan = std::lower_bound(bins.begin(), bins.end(), start,
                                    [](const OpenBin& b, int idx) { return b.index < idx; });
        }

        int packed_into = -1;
        for (; scan != bins.end(); ++scan) {
            if (scan->remaining >= w) {
                scan->used += w;
                scan->remaining -= w;
                packed_into = scan->index;
                result.bins[static_cast<std::size_t>(packed_into)].push_back(item);
                open.on_packed(*scan);
                break;
            }
        }

        if (packed_into < 0) {
            packed_into = result.bin_count();
            result.bins.push_back({item});
            open.add({packed_into, w, inst.capacity - w});
        }

        if (use_lookup) lookup.record(w, packed_into);
    }

    return result;
}

Packing next_fit_impl(const ProblemInstance& inst, std::span<const int> order) {
    Packing result;
    result.capacity = inst.capacity;

    int current_used = inst.capacity; // forces a first bin
    for (int item : order) {
        const int w = inst.weights[static_cast<std::size_t>(item)];
        if (current_used + w <= inst.capacity) {
            result.bins.back().push_back(item);
            current_used += w;
        } else {
            result.bins.push_back({item});
            current_used = w;
        }
    }
    return result;
}

Packing max_rest_naive(const ProblemInstance& inst, bool close) {
    Packing result;
    result.capacity = inst.capacity;

    OpenBinArray open(inst.capacity, inst.min_weight(), close);

    for (int item = 0; item < inst.item_count(); ++item) {
        const int w = inst.weights[static_cast<std::size_t>(item)];
        auto& bins = open.bins();

        // Bin with maximum remaining capacity; ties go to the oldest bin.
        auto best = bins.end();
        for (auto it = bins.begin(); it != bins.end(); ++it)
            if (best == bins.end() || it->remaining > best->remaining) best = it;

        if (best != bins.end() && best->remaining >= w) {
            best->used += w;
            best->remaining -= w;
            result.bins[static_cast<std::size_t>(best->index)].push_back(item);
            open.on_packed(*best);
        } else {
            const int ordinal = result.bin_count();
            result.bins.push_back({item});
            open.add({ordinal, w, inst.capacity - w});
        }
    }
    return result;
}

Packing max_rest_pq(const ProblemInstance& inst, bool close) {
    Packing result;
    result.capacity = inst.capacity;

    const int min_w = inst.min_weight();
    const int threshold = inst.capacity - min_w;

    struct Entry {
        int remaining;
        int index;
    };
    // Top = maximum remaining capacity, ties resolved toward the oldest bin,
    // matching the naive scan bit for bit.
    auto less = [](const Entry& a, const Entry& b) {
        if (a.remaining != b.remaining) return a.remaining < b.remaining;
        return a.index > b.index;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(less)> queue(less);

    for (int item = 0; item < inst.item_count(); ++item) {
        const int w = inst.weights[static_cast<std::size_t>(item)];
        if (!queue.empty() && queue.top().remaining >= w) {
            Entry top = queue.top();
            queue.pop();
            top.remaining -= w;
            result.bins[static_cast<std::size_t>(top.index)].push_back(item);
            if (!(close && inst.capacity - top.remaining > threshold)) queue.push(top);
        } else {
            const int ordinal = result.bin_count();
            result.bins.push_back({item});
            const Entry fresh{inst.capacity - w, ordinal};
            if (!(close && w > threshold)) queue.push(fresh);
        }
    }
    return result;
}

Packing best_fit_naive(const ProblemInstance& inst, bool close) {
    Packing result;
    result.capacity = inst.capacity;

    OpenBinArray open(inst.capacity, inst.min_weight(), close);

    for (int item = 0; item < inst.item_count(); ++item) {
        const int w = inst.weights[static_cast<std::size_t>(item)];
        auto& bins = open.bins();

        // Feasible bin leaving the least room after insertion; ties go to
        // the oldest bin, matching a left-to-right scan.
        auto best = bins.end();
        for (auto it = bins.begin(); it != bins.end(); ++it)
            if (it->remaining >= w && (best == bins.end() || it->remaining < best->remaining)) best = it;

        if (best != bins.end()) {
            best->used += w;
            best->remaining -= w;
            result.bins[static_cast<std::size_t>(best->index)].push_back(item);
            open.on_packed(*best);
        } else {
            const int ordinal = result.bin_count();
            result.bins.push_back({item});
            open.add({ordinal, w, inst.capacity - w});
        }
    }
    return result;
}

// Binary max-heap on remaining capacity supporting the best-fit search:
// walk the tree from the root, prune any subtree whose root cannot hold the
// item (its descendants hold no more), and keep the feasible node with the
// least remaining capacity.
class BinHeap {
public:
    bool empty() const { return nodes_.empty(); }

    void push(int remaining, int index) {
        nodes_.push_back({remaining, index});
        sift_up(nodes_.size() - 1);
    }

    // Position of the best-fit node for `weight`, or npos.
    std::size_t find_best(int weight) const {
        std::size_t best = npos;
        std::vector<std::size_t> pending;
        if (!nodes_.empty()) pending.push_back(0);
        while (!pending.empty()) {
            const std::size_t p = pending.back();
            pending.pop_back();
            if (nodes_[p].remaining < weight) continue; // whole subtree too full
            if (best == npos || nodes_[p].remaining < nodes_[best].remaining ||
                (nodes_[p].remaining == nodes_[best].remaining && nodes_[p].index < nodes_[best].index))
                best = p;
            if (2 * p + 1 < nodes_.size()) pending.push_back(2 * p + 1);
            if (2 * p + 2 < nodes_.size()) pending.push_back(2 * p + 2);
        }
        return best;
    }

    int index_at(std::size_t pos) const { return nodes_[pos].index; }
    int remaining_at(std::size_t pos) const { return nodes_[pos].remaining; }

    // Shrinks the key at pos and restores heap order; returns the node's
    // final position.
    std::size_t decrease_key(std::size_t pos, int delta) {
        nodes_[pos].remaining -= delta;
        return sift_down(pos);
    }

    void remove(std::size_t pos) {
        nodes_[pos] = nodes_.back();
        nodes_.pop_back();
        if (pos >= nodes_.size()) return;
        if (pos > 0 && nodes_[pos].remaining > nodes_[(pos - 1) / 2].remaining)
            sift_up(pos);
        else
            sift_down(pos);
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    struct Node {
        int remaining;
        int index;
    };

    void sift_up(std::size_t pos) {
        while (pos > 0) {
            const std::size_t parent = (pos - 1) / 2;
            if (nodes_[parent].remaining >= nodes_[pos].remaining) break;
            std::swap(nodes_[parent], nodes_[pos]);
            pos = parent;
        }
    }

    std::size_t sift_down(std::size_t pos) {
        for (;;) {
            std::size_t largest = pos;
            const std::size_t left = 2 * pos + 1;
            const std::size_t right = 2 * pos + 2;
            if (left < nodes_.size() && nodes_[left].remaining > nodes_[largest].remaining) largest = left;
            if (right < nodes_.size() && nodes_[right].remaining > nodes_[largest].remaining) largest = right;
            if (largest == pos) return pos;
            std::swap(nodes_[pos], nodes_[largest]);
            pos = largest;
        }
    }

    std::vector<Node> nodes_;
};

Packing best_fit_heap(const ProblemInstance& inst, bool close) {
    Packing result;
    result.capacity = inst.capacity;

    const int min_w = inst.min_weight();
    BinHeap heap;

    for (int item = 0; item < inst.item_count(); ++item) {
        const int w = inst.weights[static_cast<std::size_t>(item)];
        const std::size_t pos = heap.find_best(w);
        if (pos != BinHeap::npos) {
            result.bins[static_cast<std::size_t>(heap.index_at(pos))].push_back(item);
            const std::size_t now = heap.decrease_key(pos, w);
            if (close && heap.remaining_at(now) < min_w) heap.remove(now);
        } else {
            const int ordinal = result.bin_count();
            result.bins.push_back({item});
            if (!(close && inst.capacity - w < min_w)) heap.push(inst.capacity - w, ordinal);
        }
    }
    return result;
}

Packing best_fit_table(const ProblemInstance& inst) {
    Packing result;
    result.capacity = inst.capacity;

    CapacityTable table(inst.capacity, inst.item_count());
    result.bins.resize(inst.weights.size());
    for (int item = 0; item < inst.item_count(); ++item) {
        const int ordinal = table.take_best(inst.weights[static_cast<std::size_t>(item)]);
        assert(ordinal >= 0);
        result.bins[static_cast<std::size_t>(ordinal)].push_back(item);
    }
    // Fresh bins are handed out oldest-first, so the used ordinals form a
    // prefix.
    result.bins.resize(static_cast<std::size_t>(table.used_bins()));
    return result;
}

} // namespace

std::string_view to_string(HeuristicId id) {
    for (const auto& entry : kNames)
        if (entry.id == id) return entry.name;
    return "?";
}

std::optional<HeuristicId> heuristic_from_name(std::string_view name) {
    for (const auto& entry : kNames)
        if (entry.name == name) return entry.id;
    return std::nullopt;
}

std::vector<OpenBin> close_full_bins(int threshold, std::vector<OpenBin> bins) {
    std::erase_if(bins, [threshold](const OpenBin& b) { return b.used > threshold; });
    return bins;
}

StartIndexMap::StartIndexMap(int capacity) : tree_(static_cast<std::size_t>(std::max(capacity, 0)) + 1, 0) {}

void StartIndexMap::record(int weight, int bin_index) {
    for (std::size_t pos = static_cast<std::size_t>(weight); pos < tree_.size(); pos += pos & (~pos + 1))
        tree_[pos] = std::max(tree_[pos], bin_index);
}

int StartIndexMap::query(int weight) const {
    int best = 0;
    for (std::size_t pos = static_cast<std::size_t>(std::min<int>(weight, static_cast<int>(tree_.size()) - 1));
         pos > 0; pos -= pos & (~pos + 1))
        best = std::max(best, tree_[pos]);
    return best;
}

CapacityTable::CapacityTable(int capacity, int item_count)
    : capacity_(capacity),
      counts_(static_cast<std::size_t>(capacity) + 1, 0),
      queues_(static_cast<std::size_t>(capacity) + 1) {
    // Every bin starts unopened with full remaining capacity; ordinals are
    // queued in order so first use assigns them in order of opening.
    counts_[static_cast<std::size_t>(capacity_)] = item_count;
    for (int i = 0; i < item_count; ++i) queues_[static_cast<std::size_t>(capacity_)].push_back(i);
}

int CapacityTable::take_best(int weight) {
    for (int r = weight; r <= capacity_; ++r) {
        auto& queue = queues_[static_cast<std::size_t>(r)];
        if (queue.empty()) continue;
        const int ordinal = queue.front();
        queue.pop_front();
        --counts_[static_cast<std::size_t>(r)];
        const int now = r - weight;
        ++counts_[static_cast<std::size_t>(now)];
        queues_[static_cast<std::size_t>(now)].push_back(ordinal);
        return ordinal;
    }
    return -1;
}

int CapacityTable::count_at(int remaining) const { return counts_[static_cast<std::size_t>(remaining)]; }

int CapacityTable::used_bins() const {
    int used = 0;
    for (int r = 0; r < capacity_; ++r) used += counts_[static_cast<std::size_t>(r)];
    return used;
}

Packing next_fit(const ProblemInstance& inst) { return next_fit_impl(inst, identity_order(inst)); }

Packing next_fit_decreasing(const ProblemInstance& inst, SortKind sort) {
    return next_fit_impl(inst, sorted_indices_desc(inst, sort));
}

Packing first_fit(const ProblemInstance& inst, FirstFitVariant variant, BinClosing closing) {
    const bool close = resolve_closing(closing, variant != FirstFitVariant::naive);
    return first_fit_impl(inst, identity_order(inst), variant == FirstFitVariant::lookup, close);
}

Packing first_fit_decreasing(const ProblemInstance& inst, FirstFitVariant variant, SortKind sort,
                             BinClosing closing) {
    const bool close = resolve_closing(closing, variant != FirstFitVariant::naive);
    return first_fit_impl(inst, sorted_indices_desc(inst, sort), variant == FirstFitVariant::lookup, close);
}

Packing max_rest(const ProblemInstance& inst, MaxRestVariant variant, BinClosing closing) {
    const bool close = resolve_closing(closing, variant == MaxRestVariant::priority_queue);
    if (variant == MaxRestVariant::priority_queue) return max_rest_pq(inst, close);
    return max_rest_naive(inst, close);
}

Packing best_fit(const ProblemInstance& inst, BestFitVariant variant, BinClosing closing) {
    switch (variant) {
    case BestFitVariant::naive: return best_fit_naive(inst, resolve_closing(closing, false));
    case BestFitVariant::heap: return best_fit_heap(inst, resolve_closing(closing, false));
    case BestFitVariant::lookup_table: break;
    }
    // The table variant never reaches slots below the minimum item weight,
    // so closing has nothing to prune.
    return best_fit_table(inst);
}

Packing run_heuristic(const ProblemInstance& inst, HeuristicId id) {
    switch (id) {
    case HeuristicId::NF: return next_fit(inst);
    case HeuristicId::NFD: return next_fit_decreasing(inst, SortKind::reference);
    case HeuristicId::NFD_PLUS: return next_fit_decreasing(inst, SortKind::counting);
    case HeuristicId::FF: return first_fit(inst, FirstFitVariant::naive);
    case HeuristicId::FF_PLUS: return first_fit(inst, FirstFitVariant::compacting);
    case HeuristicId::FF_PLUS_PLUS: return first_fit(inst, FirstFitVariant::lookup);
    case HeuristicId::FFD: return first_fit_decreasing(inst, FirstFitVariant::naive, SortKind::reference);
    case HeuristicId::FFD_PLUS: return first_fit_decreasing(inst, FirstFitVariant::compacting, SortKind::counting);
    case HeuristicId::FFD_PLUS_PLUS: return first_fit_decreasing(inst, FirstFitVariant::lookup, SortKind::counting);
    case HeuristicId::MR: return max_rest(inst, MaxRestVariant::naive);
    case HeuristicId::MR_PLUS: return max_rest(inst, MaxRestVariant::priority_queue);
    case HeuristicId::BF: return best_fit(inst, BestFitVariant::naive);
    case HeuristicId::BF_HEAP: return best_fit(inst, BestFitVariant::heap);
    case HeuristicId::BF_LOOKUP: return best_fit(inst, BestFitVariant::lookup_table);
    }
    return {};
}

} // namespace binpack
