// Drives the zmcode executable end to end and checks output and exit status.

#include "support.hpp"

#include "zmcode/io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kCli = ZMCODE_CLI;
const std::string kFixtures = ZMCODE_FIXTURES;
const std::string kExample = kFixtures + "/z4_20_10.json";

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("zmcode_cli_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("info") {
    const auto ex = run("info --code " + kExample);
    CHECK(ex.status == 0);
    CHECK(contains(ex.out, "n: 20\n"));
    CHECK(contains(ex.out, "k: 10\n"));
    CHECK(contains(ex.out, "local: yes\n"));
    CHECK(contains(ex.out, "cardinality: 4^10 = 1048576\n"));
    // Both methods find the weight-2 codeword 2·(row 5 of G).
    CHECK(contains(ex.out, "d (enumeration): 2\n"));
    CHECK(contains(ex.out, "d (columns): 2\n"));
    CHECK(contains(ex.out, "t: 0\n"));
    CHECK(contains(ex.out, "H:\n" + zmcode::io::read_file(kFixtures + "/z4_20_10_control.csv")));

    const auto rep = run("info --code " + kFixtures + "/repetition_z2_3.json");
    CHECK(rep.status == 0);
    CHECK(contains(rep.out, "d: 3 (enumeration)\n"));
    CHECK(contains(rep.out, "t: 1\n"));

    const auto z6 = run("info --code " + kFixtures + "/z6_2_1.json");
    CHECK(z6.status == 0);
    CHECK(contains(z6.out, "local: no\n"));
    CHECK(contains(z6.out, "idempotents: 3 4\n"));
    CHECK(contains(z6.out, "d: 2"));
    CHECK(contains(z6.out, "t: 0\n"));

    // Enumeration skipped under a tiny cap; the column method still answers.
    const auto capped = run("info --cap 100 --code " + kExample);
    CHECK(capped.status == 0);
    CHECK(contains(capped.out, "d (enumeration): skipped"));
    CHECK(contains(capped.out, "d: 2 (columns)\n"));
}

TEST_CASE("encode") {
    CHECK(run("encode --code " + kExample + " 0000000000").out == "00000000000000000000\n");
    CHECK(run("encode --code " + kExample + " 1020223001").out == std::string(zmtest::kExampleCodeword) + "\n");
    CHECK(run("encode --code " + kExample + " 1,0,2,0,2,2,3,0,0,1").out ==
          "1,0,2,0,2,2,3,0,0,1,3,0,0,1,0,0,2,3,0,3\n");
    CHECK(run("encode --format csv --code " + kExample + " 1020223001").status == 2);
    CHECK(run("encode --code " + kExample + " 102022300").status == 2);
    CHECK(run("encode --code " + kExample + " 1020223004").status == 2);
}

TEST_CASE("decode") {
    const std::string base = "decode --code " + kExample + " ";
    const auto ok = run(base + "--t 1 --allow-ambiguous " + zmtest::kExampleReceived);
    CHECK(ok.status == 0);
    CHECK(ok.out == "codeword: " + std::string(zmtest::kExampleCodeword) + "\nerror: " + zmtest::kExampleError + "\n");

    // t = 1 exceeds the capacity of this d = 2 code.
    CHECK(run(base + "--t 1 " + zmtest::kExampleReceived).status == 6);
    // Default t = 0 only accepts codewords.
    const auto t0 = run(base + zmtest::kExampleReceived);
    CHECK(t0.status == 4);
    CHECK(t0.out == "decode failure: more than t errors\n");

    const auto clean = run(base + zmtest::kExampleCodeword);
    CHECK(clean.status == 0);
    CHECK(contains(clean.out, "error: 00000000000000000000\n"));

    // Codeword with +1 at positions 1 and 2.
    const auto two = run(base + "--t 1 --allow-ambiguous 21202230013001002303");
    CHECK(two.status == 4);
    CHECK(contains(two.out, "more than t errors"));

    // One error of symbol 2 at position 5: shares its syndrome with position 13.
    const auto amb = run(base + "--t 1 --allow-ambiguous 10200230013001002303");
    CHECK(amb.status == 4);
    CHECK(contains(amb.out, "ambiguous"));

    const auto rep = run("decode --code " + kFixtures + "/repetition_z2_3.json 101");
    CHECK(rep.out == "codeword: 111\nerror: 010\n");
    CHECK(run("decode --code " + kFixtures + "/repetition_z2_3.json 1,0,1").out == "codeword: 1,1,1\nerror: 0,1,0\n");
}

TEST_CASE("dual and check") {
    const auto golden = zmcode::io::read_file(kFixtures + "/z4_20_10_control.csv");
    const auto dual = run("dual --code " + kExample);
    CHECK(dual.status == 0);
    CHECK(dual.out == golden);
    CHECK(run("dual --code " + kFixtures + "/z6_2_1.json").out == "1,1\n");

    CHECK(run("check --code " + kExample + " --matrix " + kFixtures + "/z4_20_10_control.csv").status == 0);
    const auto doubled = temp_file("doubled.csv", "2,2\n");
    const auto bad = run("check --code " + kFixtures + "/z6_2_1.json --matrix " + doubled);
    CHECK(bad.status == 8);
    CHECK(contains(bad.out, "not linearly independent"));
    const auto wrong = temp_file("wrong.csv", "1,2\n");
    CHECK(run("check --code " + kFixtures + "/z6_2_1.json --matrix " + wrong).status == 8);
}

TEST_CASE("table") {
    const auto t = run("table --code " + kExample + " --t 1 --allow-ambiguous");
    CHECK(t.status == 0);
    CHECK(contains(t.out, "# t = 1, 60 syndromes, 1 ambiguous\n"));
    CHECK(contains(t.out, "3132333122 -> 00000300000000000000\n"));
    CHECK(contains(t.out, "0020000000 -> ambiguous\n"));
    CHECK(run("table --code " + kExample + " --t 1").status == 6);
    CHECK(run("table --code " + kExample + " --t 3 --cap 1000").status == 5);
}

TEST_CASE("simulate") {
    const std::string rep = "simulate --code " + kFixtures + "/repetition_z2_3.json";
    const auto one = run(rep + " --trials 1000 --errors 1 --seed 42");
    CHECK(one.status == 0);
    CHECK(contains(one.out, "corrected: 1000\nfailed: 0\nmiscorrected: 0\n"));

    const auto zero = run("simulate --code " + kExample + " --trials 200 --errors 0 --seed 1");
    CHECK(contains(zero.out, "corrected: 200\nfailed: 0\nmiscorrected: 0\n"));

    const std::string two = "simulate --code " + kExample + " --t 1 --allow-ambiguous --trials 500 --errors 2";
    const auto a = run(two + " --seed 9");
    const auto b = run(two + " --seed 9");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "trials: 500\n"));

    CHECK(run("simulate --code " + kExample + " --errors 21").status == 3);
}

TEST_CASE("exit statuses for bad input") {
    CHECK(run("").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("info").status == 1);
    CHECK(run("info --code " + temp_file("bad.json", "{ not json")).status == 2);
    const auto not_free = temp_file("notfree.json", R"({"modulus": 4, "n": 2, "k": 1, "generator": [[2, 0]]})");
    CHECK(run("info --code " + not_free).status == 3);
    const auto big = temp_file("big.json", R"({"modulus": 4294967296, "n": 2, "k": 1, "generator": [[1, 0]]})");
    CHECK(run("info --code " + big).status == 3);
}
