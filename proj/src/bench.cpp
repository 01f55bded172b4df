#include "binpack/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace binpack {

namespace {

std::string format_seconds(double seconds, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, seconds);
    return buf;
}

} // namespace

GeneratorSpec uniform_spec(int n, int capacity, std::uint64_t seed) {
    return {GeneratorKind::uniform, n, capacity, 1, capacity, seed};
}

GeneratorSpec nf_adversarial_spec(int n) { return {GeneratorKind::nf_adversarial, n, 2 * n, 1, 1, 0}; }

ProblemInstance generate(const GeneratorSpec& spec) {
    ProblemInstance inst;

    if (spec.kind == GeneratorKind::nf_adversarial) {
        if (spec.n < 1) throw std::invalid_argument("nf-adversarial generator requires n >= 1");
        inst.capacity = 2 * spec.n;
        inst.name = "nf-adv-n" + std::to_string(spec.n);
        inst.weights.reserve(static_cast<std::size_t>(2 * spec.n));
        for (int i = 0; i < spec.n; ++i) {
            inst.weights.push_back(spec.n);
            inst.weights.push_back(1);
        }
        return inst;
    }

    if (spec.n < 0) throw std::invalid_argument("uniform generator requires n >= 0");
    if (spec.min_w < 1 || spec.min_w > spec.max_w || spec.max_w > spec.capacity) {
        std::ostringstream msg;
        msg << "invalid weight range [" << spec.min_w << ", " << spec.max_w << "] for capacity "
            << spec.capacity;
        throw std::invalid_argument(msg.str());
    }

    inst.capacity = spec.capacity;
    {
        std::ostringstream name;
        name << "uniform-n" << spec.n << "-c" << spec.capacity << "-s" << spec.seed;
        inst.name = name.str();
    }
    SplitMix64 rng(spec.seed);
    inst.weights.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) inst.weights.push_back(rng.bounded(spec.min_w, spec.max_w));
    return inst;
}

TimingResult time_heuristic(const ProblemInstance& inst, HeuristicId id, int repeats) {
    if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");

    const Packing reference = run_heuristic(inst, id);
    if (const VerifyResult check = verify_packing(inst, reference); !check) {
        std::ostringstream msg;
        msg << to_string(id) << " produced an invalid packing on '" << inst.name << "': " << check.violation;
        throw std::runtime_error(msg.str());
    }

    using clock = std::chrono::steady_clock;
    double best = -1.0;
    for (int rep = 0; rep < repeats; ++rep) {
        const auto start = clock::now();
        const Packing timed = run_heuristic(inst, id);
        const auto stop = clock::now();
        if (timed.bin_count() != reference.bin_count())
            throw std::runtime_error("non-deterministic heuristic run"); // also keeps `timed` live
        const double seconds = std::chrono::duration<double>(stop - start).count();
        if (best < 0.0 || seconds < best) best = seconds;
    }
    return {reference.bin_count(), best};
}

std::vector<RunRecord> run_suite(const std::vector<ProblemInstance>& instances,
                                 const std::vector<HeuristicId>& heuristics, int repeats) {
    if (instances.empty() || heuristics.empty())
        throw std::invalid_argument("run_suite needs at least one instance and one heuristic");

    std::vector<RunRecord> records;
    records.reserve(instances.size() * heuristics.size());
    for (const ProblemInstance& inst : instances) {
        const std::size_t group = records.size();
        for (HeuristicId id : heuristics) {
            const TimingResult timing = time_heuristic(inst, id, repeats);
            records.push_back({inst.name, id, timing.bins, timing.seconds, false, false});
        }
        int min_bins = records[group].bins;
        double min_time = records[group].seconds;
        for (std::size_t r = group; r < records.size(); ++r) {
            min_bins = std::min(min_bins, records[r].bins);
            min_time = std::min(min_time, records[r].seconds);
        }
        for (std::size_t r = group; r < records.size(); ++r) {
            records[r].best_bins = records[r].bins == min_bins;
            records[r].best_time = records[r].seconds == min_time;
        }
    }
    return records;
}

std::string emit_table(const std::vector<RunRecord>& records, TableFormat format) {
    std::ostringstream out;

    if (format == TableFormat::csv) {
        out << "instance,heuristic,bins,seconds,best_bins,best_time\n";
        for (const RunRecord& r : records)
            out << r.instance_name << ',' << to_string(r.heuristic) << ',' << r.bins << ','
                << format_seconds(r.seconds, "%.9g") << ',' << (r.best_bins ? 1 : 0) << ','
                << (r.best_time ? 1 : 0) << '\n';
        return out.str();
    }

    out << "| Problem set | Algorithm | Bins | Time in s |\n";
    out << "| --- | --- | --- | --- |\n";
    std::string_view last_name;
    for (const RunRecord& r : records) {
        const bool first_of_group = r.instance_name != last_name;
        last_name = r.instance_name;
        out << "| " << (first_of_group ? r.instance_name : "") << " | " << to_string(r.heuristic) << " | "
            << r.bins << (r.best_bins ? "†" : "") << " | " << format_seconds(r.seconds, "%.6g")
            << (r.best_time ? "†" : "") << " |\n";
    }
    return out.str();
}

std::vector<RunRecord> parse_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "instance,heuristic,bins,seconds,best_bins,best_time")
        throw std::runtime_error("unrecognized CSV header");

    std::vector<RunRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string name, algo, bins, seconds, best_bins, best_time;
        if (!std::getline(fields, name, ',') || !std::getline(fields, algo, ',') ||
            !std::getline(fields, bins, ',') || !std::getline(fields, seconds, ',') ||
            !std::getline(fields, best_bins, ',') || !std::getline(fields, best_time))
            throw std::runtime_error("short CSV row at line " + std::to_string(line_no));
        const auto id = heuristic_from_name(algo);
        if (!id) throw std::runtime_error("unknown heuristic '" + algo + "' at line " + std::to_string(line_no));
        RunRecord r;
        r.instance_name = name;
        r.heuristic = *id;
        try {
            r.bins = std::stoi(bins);
            r.seconds = std::stod(seconds);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed numeric field at line " + std::to_string(line_no));
        }
        if ((best_bins != "0" && best_bins != "1") || (best_time != "0" && best_time != "1"))
            throw std::runtime_error("malformed flag at line " + std::to_string(line_no));
        r.best_bins = best_bins == "1";
        r.best_time = best_time == "1";
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace binpack
