#include "binpack/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace binpack {

std::int64_t ProblemInstance::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

int ProblemInstance::min_weight() const {
    if (weights.empty()) return capacity;
    return *std::min_element(weights.begin(), weights.end());
}

namespace {

// Parses a whole line as one decimal integer. Tolerates surrounding
// whitespace and a trailing CR; anything else is malformed.
int parse_int_line(const std::string& raw, int line_no) {
    std::size_t begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        throw ParseError(line_no, "malformed integer ''");
    std::size_t end = raw.find_last_not_of(" \t\r");
    const char* first = raw.data() + begin;
    const char* last = raw.data() + end + 1;

    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line_no, "malformed integer '" + raw.substr(begin, end - begin + 1) + "'");
    return value;
}

bool read_line(std::istream& in, std::string& line) {
    return static_cast<bool>(std::getline(in, line));
}

} // namespace

ProblemInstance parse_instance(std::istream& in, std::string name) {
    ProblemInstance inst;
    inst.name = std::move(name);

    std::string line;
    int line_no = 0;

    if (!read_line(in, line))
        throw ParseError(1, "missing item count");
    line_no = 1;
    const int n = parse_int_line(line, line_no);
    if (n < 0)
        throw ParseError(line_no, "item count " + std::to_string(n) + " is negative");

    if (!read_line(in, line))
        throw ParseError(2, "missing capacity");
    line_no = 2;
    inst.capacity = parse_int_line(line, line_no);
    if (inst.capacity < 1)
        throw ParseError(line_no, "capacity " + std::to_string(inst.capacity) + " must be >= 1");

    inst.weights.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!read_line(in, line))
            throw ParseError(line_no + 1, "expected " + std::to_string(n) + " weights but file ends after " +
                                              std::to_string(i));
        ++line_no;
        const int w = parse_int_line(line, line_no);
        if (w < 1)
            throw ParseError(line_no, "weight " + std::to_string(w) + " must be >= 1");
        if (w > inst.capacity)
            throw ParseError(line_no,
                             "weight " + std::to_string(w) + " exceeds capacity " + std::to_string(inst.capacity));
        inst.weights.push_back(w);
    }

    // Anything but trailing blank lines means the declared count is wrong.
    while (read_line(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError(line_no, "expected " + std::to_string(n) + " weights but found more");
    }

    return inst;
}

ProblemInstance parse_instance_text(const std::string& text, std::string name) {
    std::istringstream in(text);
    return parse_instance(in, std::move(name));
}

ProblemInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file: " + path);
    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos) stem.erase(0, slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem.erase(dot);
    return parse_instance(in, stem);
}

std::string write_instance(const ProblemInstance& inst) {
    std::string out;
    out += std::to_string(inst.item_count());
    out += '\n';
    out += std::to_string(inst.capacity);
    out += '\n';
    for (int w : inst.weights) {
        out += std::to_string(w);
        out += '\n';
    }
    return out;
}

VerifyResult verify_packing(const ProblemInstance& inst, const Packing& p) {
    auto violation = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };

    if (p.capacity != inst.capacity)
        return violation("packing capacity " + std::to_string(p.capacity) + " differs from instance capacity " +
                         std::to_string(inst.capacity));

    const int n = inst.item_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);

    for (std::size_t b = 0; b < p.bins.size(); ++b) {
        const auto& bin = p.bins[b];
        if (bin.empty())
            return violation("bin " + std::to_string(b) + " is empty");
        std::int64_t load = 0;
        for (int item : bin) {
            if (item < 0 || item >= n)
                return violation("item index " + std::to_string(item) + " out of range in bin " + std::to_string(b));
            if (seen[static_cast<std::size_t>(item)])
                return violation("item " + std::to_string(item) + " appears twice");
            seen[static_cast<std::size_t>(item)] = 1;
            load += inst.weights[static_cast<std::size_t>(item)];
        }
        if (load > inst.capacity)
            return violation("bin " + std::to_string(b) + " overflows: " + std::to_string(load) + " > " +
                             std::to_string(inst.capacity));
    }

    for (int i = 0; i < n; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            return violation("item " + std::to_string(i) + " missing from packing");

    return {};
}

LowerBoundReport lower_bound(const ProblemInstance& inst) {
    LowerBoundReport report;
    const std::int64_t total = inst.total_weight();
    report.l1 = static_cast<int>((total + inst.capacity - 1) / inst.capacity);
    report.trivial_max = inst.item_count();
    return report;
}

std::vector<int> counting_sort_desc(const std::vector<int>& weights, int max_weight) {
    if (max_weight < 1)
        throw std::invalid_argument("max_weight must be >= 1");

    std::vector<int> counts(static_cast<std::size_t>(max_weight) + 1, 0);
    for (int w : weights) {
        if (w < 1 || w > max_weight)
            throw std::invalid_argument("weight " + std::to_string(w) + " outside [1, " + std::to_string(max_weight) +
                                        "]");
        ++counts[static_cast<std::size_t>(w)];
    }

    std::vector<int> sorted;
    sorted.reserve(weights.size());
    for (int w = max_weight; w >= 1; --w)
        sorted.insert(sorted.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(w)]), w);
    return sorted;
}

} // namespace binpack
