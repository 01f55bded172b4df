#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "binpack/bench.hpp"
#include "binpack/cli.hpp"

using namespace binpack;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// Per-process scratch directory, wiped on exit.
const fs::path& scratch() {
    static const struct Dir {
        fs::path path;
        Dir() : path(fs::temp_directory_path() / "binpack-cli-test") {
            fs::remove_all(path);
            fs::create_directories(path);
        }
        ~Dir() { std::error_code ec; fs::remove_all(path, ec); }
    } dir;
    return dir.path;
}

std::string file_path(const std::string& name, const std::string& content) {
    const fs::path p = scratch() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("pack prints the bin count") {
    const std::string inst = file_path("a.dat", "4\n10\n5\n6\n4\n5\n");

    const CliResult ff = run({"pack", "--algo", "FF", "--input", inst});
    CHECK(ff.code == 0);
    CHECK(ff.out == "3\n");
    CHECK(ff.err.empty());

    const CliResult bf = run({"pack", "--algo", "BF++", "--input", inst});
    CHECK(bf.code == 0);
    CHECK(bf.out == "2\n");
}

TEST_CASE("pack emits the full assignment on request") {
    const std::string inst = file_path("b.dat", "4\n10\n5\n6\n4\n5\n");

    const CliResult r = run({"pack", "--algo", "FF", "--input", inst, "--assignment"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 2\n1\n3\n");

    const std::string out_file = (scratch() / "b.packing").string();
    const CliResult w = run({"pack", "--algo", "FF", "--input", inst, "--out", out_file});
    CHECK(w.code == 0);
    CHECK(w.out == "3\n");
    CHECK(slurp(out_file) == "0 2\n1\n3\n");
}

TEST_CASE("pack rejects unknown algorithms and unreadable input") {
    const std::string inst = file_path("c.dat", "1\n10\n5\n");

    const CliResult bad_algo = run({"pack", "--algo", "WF", "--input", inst});
    CHECK(bad_algo.code == 2);
    CHECK(bad_algo.err.find("unknown algorithm 'WF'") != std::string::npos);
    CHECK(bad_algo.err.find("BF-heap") != std::string::npos); // lists the valid names

    CHECK(run({"pack", "--algo", "FF", "--input", (scratch() / "missing.dat").string()}).code == 2);

    const std::string broken = file_path("broken.dat", "2\n5\n6\n1\n");
    const CliResult parse = run({"pack", "--algo", "FF", "--input", broken});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("weight 6 exceeds capacity 5 at line 3") != std::string::npos);
}

TEST_CASE("gen writes the adversarial family that defeats next-fit") {
    const std::string out_file = (scratch() / "adv.dat").string();
    const CliResult gen = run({"gen", "--kind", "nf-adversarial", "--n", "3", "--out", out_file});
    CHECK(gen.code == 0);
    CHECK(slurp(out_file) == "6\n6\n3\n1\n3\n1\n3\n1\n");

    const CliResult packed = run({"pack", "--algo", "NF", "--input", out_file});
    CHECK(packed.code == 0);
    CHECK(packed.out == "3\n");
}

TEST_CASE("gen is byte-identical across invocations with one seed") {
    const std::string f1 = (scratch() / "g1.dat").string();
    const std::string f2 = (scratch() / "g2.dat").string();
    const std::vector<std::string> base = {"gen",     "--kind", "uniform", "--n",  "200",
                                           "--capacity", "500",    "--seed",  "99"};
    auto with_out = [&](const std::string& path) {
        std::vector<std::string> args = base;
        args.insert(args.end(), {"--out", path});
        return args;
    };
    CHECK(run(with_out(f1)).code == 0);
    CHECK(run(with_out(f2)).code == 0);
    const std::string bytes = slurp(f1);
    CHECK_FALSE(bytes.empty());
    CHECK(bytes == slurp(f2));

    // stdout emission carries the same bytes
    const CliResult to_stdout = run(base);
    CHECK(to_stdout.code == 0);
    CHECK(to_stdout.out == bytes);
}

TEST_CASE("gen validates its parameters") {
    CHECK(run({"gen", "--kind", "uniform", "--n", "5"}).code == 2);          // no capacity
    CHECK(run({"gen", "--kind", "uniform", "--n", "5", "--capacity", "10", "--min-w", "0"}).code == 2);
    CHECK(run({"gen", "--kind", "tricky", "--n", "5"}).code == 2);           // unknown family
    CHECK(run({"gen", "--capacity", "10"}).code == 2);                        // --n is required
}

TEST_CASE("verify checks packings from a file or stdin") {
    const std::string inst = file_path("v.dat", "3\n10\n5\n5\n5\n");

    const std::string good = file_path("good.packing", "0 1\n2\n");
    const CliResult ok = run({"verify", "--input", inst, "--packing", good});
    CHECK(ok.code == 0);
    CHECK(ok.out == "OK\n");

    const std::string bad = file_path("bad.packing", "0 1 2\n");
    const CliResult overflow = run({"verify", "--input", inst, "--packing", bad});
    CHECK(overflow.code == 1);
    CHECK(overflow.err.find("bin 0 overflows: 15 > 10") != std::string::npos);

    const std::string garbage = file_path("garbage.packing", "0 one\n");
    CHECK(run({"verify", "--input", inst, "--packing", garbage}).code == 2);

    std::istringstream piped("0 1\n2\n");
    auto* old = std::cin.rdbuf(piped.rdbuf());
    const CliResult from_stdin = run({"verify", "--input", inst});
    std::cin.rdbuf(old);
    CHECK(from_stdin.code == 0);
    CHECK(from_stdin.out == "OK\n");
}

TEST_CASE("pack assignments satisfy verify end to end") {
    const std::string inst = file_path("loop.dat", "6\n17\n9\n8\n5\n13\n4\n11\n");
    const std::string packing = (scratch() / "loop.packing").string();
    CHECK(run({"pack", "--algo", "FFD++", "--input", inst, "--out", packing}).code == 0);
    CHECK(run({"verify", "--input", inst, "--packing", packing}).code == 0);
}

TEST_CASE("opt prints the exact optimum within its size limit") {
    const std::string inst = file_path("o.dat", "4\n10\n5\n6\n4\n5\n");

    const CliResult small = run({"opt", "--input", inst});
    CHECK(small.code == 0);
    CHECK(small.out == "2\n");

    const CliResult refused = run({"opt", "--input", inst, "--item-limit", "3"});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("--item-limit 3") != std::string::npos);
}

TEST_CASE("check-bounds reports per-claim tallies") {
    const CliResult r =
        run({"check-bounds", "--count", "25", "--n", "10", "--capacity", "50", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FF < 17/10*opt + 2: 25/25 hold") != std::string::npos);
    CHECK(r.out.find("FFD < 11/9*opt + 4: 25/25 hold") != std::string::npos);
    CHECK(r.out.find("NF <= 2*opt: 25/25 hold") != std::string::npos);
}

TEST_CASE("check-bounds accepts explicit instances") {
    const std::string inst = file_path("cb.dat", "4\n10\n5\n6\n4\n5\n");
    const CliResult r = run({"check-bounds", "--input", inst});
    CHECK(r.code == 0);
    CHECK(r.out.find("1/1 hold") != std::string::npos);
}

TEST_CASE("bench emits both table formats") {
    const std::string i1 = file_path("bench1.dat", "4\n10\n5\n6\n4\n5\n");
    const std::string i2 = file_path("bench2.dat", "2\n10\n9\n9\n");

    const CliResult md =
        run({"bench", "--input", i1, "--input", i2, "--repeats", "2"});
    CHECK(md.code == 0);
    CHECK(md.out.find("| Problem set | Algorithm | Bins | Time in s |") != std::string::npos);
    CHECK(md.out.find("| bench1 | MR+ |") != std::string::npos);

    const CliResult csv = run({"bench", "--input", i1, "--input", i2, "--repeats", "2", "--format",
                               "csv", "--algo", "FF", "--algo", "BF"});
    CHECK(csv.code == 0);
    const auto records = parse_table_csv(csv.out);
    REQUIRE(records.size() == 4);
    CHECK(records[0].instance_name == "bench1");
    CHECK(records[0].heuristic == HeuristicId::FF);
    CHECK(records[0].bins == 3);
    CHECK(records[1].heuristic == HeuristicId::BF);
    CHECK(records[1].bins == 2);
    CHECK(records[1].best_bins);

    CHECK(run({"bench", "--input", i1, "--algo", "nope"}).code == 2);
}

TEST_CASE("usage errors and help exit as documented") {
    CHECK(run({}).code == 2);                      // a subcommand is required
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"pack", "--algo", "FF"}).code == 2); // missing --input
    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("pack") != std::string::npos);
}
