#ifndef BINPACK_CORE_HPP
#define BINPACK_CORE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace binpack {

// A one-dimensional bin-packing instance: a bin capacity and the item
// weights in arrival order. Weights are positive integers, each at most
// the capacity; an instance with zero items is allowed.
struct ProblemInstance {
    int capacity = 1;
    std::vector<int> weights;
    std::string name;

    int item_count() const { return static_cast<int>(weights.size()); }
    std::int64_t total_weight() const;
    // Smallest item weight; capacity for an empty instance (so that the
    // closing threshold capacity - min_weight degenerates to 0).
    int min_weight() const;

    bool operator==(const ProblemInstance& other) const {
        return capacity == other.capacity && weights == other.weights;
    }
};

// The output of a heuristic: bins in order of opening, each holding the
// 0-based indices of the items packed into it.
struct Packing {
    int capacity = 1;
    std::vector<std::vector<int>> bins;

    int bin_count() const { return static_cast<int>(bins.size()); }
};

struct LowerBoundReport {
    int l1 = 0;          // ceil(total weight / capacity)
    int trivial_max = 0; // one bin per item
};

// Verdict of verify_packing: ok == true means every invariant holds,
// otherwise `violation` describes the first one found.
struct VerifyResult {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(message + " at line " + std::to_string(line)),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Instance file format: line 1 = item count n, line 2 = capacity, then n
// lines of one weight each. ASCII decimal, LF line endings.
ProblemInstance parse_instance(std::istream& in, std::string name = "");
ProblemInstance parse_instance_text(const std::string& text, std::string name = "");
ProblemInstance load_instance_file(const std::string& path);

std::string write_instance(const ProblemInstance& inst);

VerifyResult verify_packing(const ProblemInstance& inst, const Packing& p);

LowerBoundReport lower_bound(const ProblemInstance& inst);

// Sorts positive integer keys into non-increasing order in O(n + max_weight).
// Callers pass the instance capacity as max_weight so the bucket allocation
// is predictable. Throws std::invalid_argument on a key outside [1, max_weight].
std::vector<int> counting_sort_desc(const std::vector<int>& weights, int max_weight);

} // namespace binpack

#endif
