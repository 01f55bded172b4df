#ifndef BINPACK_BENCH_HPP
#define BINPACK_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "binpack/core.hpp"
#include "binpack/heuristics.hpp"

namespace binpack {

// splitmix64. Chosen over <random> engines-plus-distributions because the
// standard leaves uniform_int_distribution's mapping unspecified; this
// sequence is pinned by the three constants below on every platform, which
// keeps generated instances byte-identical across toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Draw in [lo, hi] by modulo. The bias is irrelevant for benchmarking
    // and the mapping, unlike a distribution object, never changes.
    int bounded(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

enum class GeneratorKind {
    uniform,        // n weights drawn uniformly from [min_w, max_w]
    nf_adversarial, // capacity 2n, 2n items alternating (n, 1, n, 1, …)
};

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::uniform;
    int n = 0;
    int capacity = 1;
    int min_w = 1; // uniform only
    int max_w = 1; // uniform only
    std::uint64_t seed = 0;
};

GeneratorSpec uniform_spec(int n, int capacity, std::uint64_t seed); // full weight range
GeneratorSpec nf_adversarial_spec(int n);

// Same GeneratorSpec, same bytes; throws std::invalid_argument on a bad weight
// range. The adversarial family alternates a weight that half-fills the bin
// with one the bin can absorb n times, so Next-Fit strands half the space.
ProblemInstance generate(const GeneratorSpec& spec);

struct TimingResult {
    int bins;
    double seconds; // minimum over the repeats, monotonic clock
};

// Verifies the heuristic's packing once (untimed; throws std::runtime_error
// on an invalid packing), then times the packing call alone `repeats` times
// and keeps the fastest.
TimingResult time_heuristic(const ProblemInstance& inst, HeuristicId id, int repeats);

struct RunRecord {
    std::string instance_name;
    HeuristicId heuristic;
    int bins = 0;
    double seconds = 0.0;
    bool best_bins = false; // row reaches the instance's minimum bin count
    bool best_time = false; // row reaches the instance's minimum time
};

// One record per (instance, heuristic), grouped by instance in input order;
// best_bins/best_time mark every row attaining the group minimum.
std::vector<RunRecord> run_suite(const std::vector<ProblemInstance>& instances,
                                 const std::vector<HeuristicId>& heuristics, int repeats);

enum class TableFormat { markdown, csv };

// markdown: | Problem set | Algorithm | Bins | Time in s | with † appended
// to group-best cells, instance name shown on its group's first row.
// csv: header instance,heuristic,bins,seconds,best_bins,best_time with 0/1
// booleans and LF endings.
std::string emit_table(const std::vector<RunRecord>& records, TableFormat format);

// Inverse of emit_table(csv); throws std::runtime_error on schema mismatch.
std::vector<RunRecord> parse_table_csv(const std::string& text);

} // namespace binpack

#endif
