#include "binpack/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "binpack/bench.hpp"
#include "binpack/core.hpp"
#include "binpack/heuristics.hpp"
#include "binpack/oracle.hpp"

namespace binpack {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string known_algorithm_names() {
    std::string names;
    for (HeuristicId id : kAllHeuristics) {
        if (!names.empty()) names += ", ";
        names += to_string(id);
    }
    return names;
}

HeuristicId algorithm_or_throw(const std::string& name) {
    if (const auto id = heuristic_from_name(name)) return *id;
    throw std::invalid_argument("unknown algorithm '" + name + "' (known: " + known_algorithm_names() + ")");
}

std::string assignment_text(const Packing& p) {
    std::ostringstream out;
    for (const auto& bin : p.bins) {
        for (std::size_t i = 0; i < bin.size(); ++i) out << (i ? " " : "") << bin[i];
        out << '\n';
    }
    return out.str();
}

// Inverse of assignment_text: one bin per line, blank lines ignored.
Packing parse_assignment(std::istream& in, int capacity) {
    Packing p;
    p.capacity = capacity;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::vector<int> bin;
        int index = 0;
        while (fields >> index) bin.push_back(index);
        if (!fields.eof()) throw ParseError(line_no, "malformed item index");
        if (!bin.empty()) p.bins.push_back(std::move(bin));
    }
    return p;
}

void write_file_or_throw(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string describe(const BoundClaim& claim) {
    std::string text(to_string(claim.heuristic));
    text += claim.strict ? " < " : " <= ";
    text += to_string(claim.multiplier) + "*opt";
    if (claim.additive != 0) text += " + " + std::to_string(claim.additive);
    return text;
}

struct PackArgs {
    std::string algo;
    std::string input;
    std::string out_path;
    bool assignment = false;
};

int cmd_pack(const PackArgs& a, std::ostream& out, std::ostream& err) {
    const ProblemInstance inst = load_instance_file(a.input);
    const HeuristicId id = algorithm_or_throw(a.algo);
    const Packing packing = run_heuristic(inst, id);
    if (const VerifyResult check = verify_packing(inst, packing); !check) {
        err << "error: " << a.algo << " produced an invalid packing: " << check.violation << "\n";
        return kExitViolation;
    }
    if (!a.out_path.empty()) write_file_or_throw(a.out_path, assignment_text(packing));
    if (a.assignment)
        out << assignment_text(packing);
    else
        out << packing.bin_count() << "\n";
    return kExitOk;
}

struct GenArgs {
    std::string kind = "uniform";
    int n = 0;
    int capacity = 0;
    int min_w = 1;
    int max_w = 0; // 0 = full range up to capacity
    std::uint64_t seed = 0;
    std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    GeneratorSpec spec;
    if (a.kind == "nf-adversarial") {
        spec = nf_adversarial_spec(a.n);
    } else {
        if (a.capacity < 1) throw std::invalid_argument("gen --kind uniform requires --capacity >= 1");
        spec = uniform_spec(a.n, a.capacity, a.seed);
        spec.min_w = a.min_w;
        spec.max_w = a.max_w == 0 ? a.capacity : a.max_w;
    }
    const std::string text = write_instance(generate(spec));
    if (!a.out_path.empty())
        write_file_or_throw(a.out_path, text);
    else
        out << text;
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> inputs;
    std::vector<std::string> algos;
    int repeats = 5;
    std::string format = "markdown";
    std::string out_path;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    std::vector<ProblemInstance> instances;
    instances.reserve(a.inputs.size());
    for (const std::string& path : a.inputs) instances.push_back(load_instance_file(path));

    // Default set and order mirror the report table.
    std::vector<std::string> names = a.algos;
    if (names.empty()) names = {"MR+", "FF++", "FFD++", "NF", "NFD+", "BF++"};
    std::vector<HeuristicId> heuristics;
    heuristics.reserve(names.size());
    for (const std::string& name : names) heuristics.push_back(algorithm_or_throw(name));

    const auto records = run_suite(instances, heuristics, a.repeats);
    const std::string table =
        emit_table(records, a.format == "csv" ? TableFormat::csv : TableFormat::markdown);
    if (!a.out_path.empty())
        write_file_or_throw(a.out_path, table);
    else
        out << table;
    return kExitOk;
}

struct VerifyArgs {
    std::string input;
    std::string packing_path;
};

int cmd_verify(const VerifyArgs& a, std::istream& stdin_stream, std::ostream& out, std::ostream& err) {
    const ProblemInstance inst = load_instance_file(a.input);
    Packing packing;
    if (a.packing_path.empty()) {
        packing = parse_assignment(stdin_stream, inst.capacity);
    } else {
        std::ifstream in(a.packing_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open '" + a.packing_path + "'");
        packing = parse_assignment(in, inst.capacity);
    }
    if (const VerifyResult check = verify_packing(inst, packing); !check) {
        err << "invalid packing: " << check.violation << "\n";
        return kExitViolation;
    }
    out << "OK\n";
    return kExitOk;
}

struct OptArgs {
    std::string input;
    int item_limit = 18;
};

int cmd_opt(const OptArgs& a, std::ostream& out, std::ostream& err) {
    const ProblemInstance inst = load_instance_file(a.input);
    if (const auto opt = exact_opt(inst, a.item_limit)) {
        out << *opt << "\n";
        return kExitOk;
    }
    err << "error: instance has " << inst.item_count() << " items, exceeding --item-limit "
        << a.item_limit << "\n";
    return kExitUsage;
}

struct CheckBoundsArgs {
    std::vector<std::string> inputs;
    int count = 500;
    int max_n = 15;
    int capacity = 100;
    std::uint64_t seed = 1;
    int item_limit = 18;
};

int cmd_check_bounds(const CheckBoundsArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<ProblemInstance> instances;
    if (!a.inputs.empty()) {
        for (const std::string& path : a.inputs) instances.push_back(load_instance_file(path));
    } else {
        SplitMix64 rng(a.seed);
        for (int i = 0; i < a.count; ++i) {
            GeneratorSpec spec = uniform_spec(rng.bounded(1, a.max_n), a.capacity, rng.next());
            instances.push_back(generate(spec));
        }
    }

    const auto& claims = worst_case_claims();
    std::array<int, 3> held{};
    int checked = 0;
    int skipped = 0;
    bool violated = false;

    for (const ProblemInstance& inst : instances) {
        const auto opt = exact_opt(inst, a.item_limit);
        if (!opt) {
            err << "note: skipping '" << inst.name << "' (" << inst.item_count()
                << " items exceed --item-limit " << a.item_limit << ")\n";
            ++skipped;
            continue;
        }
        ++checked;
        for (std::size_t c = 0; c < claims.size(); ++c) {
            const int bins = run_heuristic(inst, claims[c].heuristic).bin_count();
            const BoundVerdict verdict = check_bound(claims[c], bins, *opt);
            if (verdict.holds) {
                ++held[c];
            } else {
                violated = true;
                out << describe(claims[c]) << " violated on '" << inst.name << "': " << bins
                    << " bins vs optimum " << *opt << " (margin " << to_string(verdict.margin) << ")\n";
            }
        }
    }

    for (std::size_t c = 0; c < claims.size(); ++c)
        out << describe(claims[c]) << ": " << held[c] << "/" << checked << " hold\n";
    if (skipped > 0) err << "note: " << skipped << " instance(s) skipped\n";
    return violated ? kExitViolation : kExitOk;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"One-dimensional bin-packing heuristics and benchmarks"};
    app.name("binpack");
    app.require_subcommand(1);

    PackArgs pack;
    CLI::App* pack_cmd = app.add_subcommand("pack", "Pack one instance with one algorithm");
    pack_cmd->add_option("--algo", pack.algo, "Algorithm name (" + known_algorithm_names() + ")")
        ->required();
    pack_cmd->add_option("--input", pack.input, "Instance file")->required();
    pack_cmd->add_flag("--assignment", pack.assignment, "Print bin contents instead of the bin count");
    pack_cmd->add_option("--out", pack.out_path, "Also write the bin contents to this file");

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    gen_cmd->add_option("--kind", gen.kind, "Instance family")
        ->check(CLI::IsMember({"uniform", "nf-adversarial"}));
    gen_cmd->add_option("--n", gen.n, "Item count (family parameter for nf-adversarial)")->required();
    gen_cmd->add_option("--capacity", gen.capacity, "Bin capacity (uniform)");
    gen_cmd->add_option("--min-w", gen.min_w, "Smallest weight drawn (uniform, default 1)");
    gen_cmd->add_option("--max-w", gen.max_w, "Largest weight drawn (uniform, default capacity)");
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("--out", gen.out_path, "Output file (stdout when omitted)");

    BenchArgs bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Time algorithms across instance files");
    bench_cmd->add_option("--input", bench.inputs, "Instance file (repeatable)")->required();
    bench_cmd->add_option("--algo", bench.algos, "Algorithm (repeatable; default report set)");
    bench_cmd->add_option("--repeats", bench.repeats, "Timed repetitions per cell, fastest kept")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--format", bench.format, "Output format")
        ->check(CLI::IsMember({"markdown", "csv"}));
    bench_cmd->add_option("--out", bench.out_path, "Output file (stdout when omitted)");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Check a packing against an instance");
    verify_cmd->add_option("--input", verify.input, "Instance file")->required();
    verify_cmd->add_option("--packing", verify.packing_path,
                           "Packing file, one bin of item indices per line (stdin when omitted)");

    OptArgs opt;
    CLI::App* opt_cmd = app.add_subcommand("opt", "Exact minimum bin count (small instances)");
    opt_cmd->add_option("--input", opt.input, "Instance file")->required();
    opt_cmd->add_option("--item-limit", opt.item_limit, "Refuse instances above this item count")
        ->check(CLI::PositiveNumber);

    CheckBoundsArgs bounds;
    CLI::App* bounds_cmd =
        app.add_subcommand("check-bounds", "Test the worst-case guarantees against exact optima");
    bounds_cmd->add_option("--input", bounds.inputs, "Instance file (repeatable; default: generated)");
    bounds_cmd->add_option("--count", bounds.count, "Generated instances to test")
        ->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--n", bounds.max_n, "Largest generated item count")
        ->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--capacity", bounds.capacity, "Generated bin capacity")
        ->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--seed", bounds.seed, "Generator seed");
    bounds_cmd->add_option("--item-limit", bounds.item_limit, "Exact-solver size cutoff")
        ->check(CLI::PositiveNumber);

    try {
        std::reverse(args.begin(), args.end()); // CLI11's vector overload wants last-arg-first
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (pack_cmd->parsed()) return cmd_pack(pack, out, err);
        if (gen_cmd->parsed()) return cmd_gen(gen, out);
        if (bench_cmd->parsed()) return cmd_bench(bench, out);
        if (verify_cmd->parsed()) return cmd_verify(verify, std::cin, out, err);
        if (opt_cmd->parsed()) return cmd_opt(opt, out, err);
        if (bounds_cmd->parsed()) return cmd_check_bounds(bounds, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage; // unreachable with require_subcommand(1)
}

} // namespace binpack
