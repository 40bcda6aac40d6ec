#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exitCode;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args, const std::string& envPrefix = "") {
    std::string cmd = envPrefix + " '" + std::string(CLI_BINARY_PATH) + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("convert to the induced character basis") {
    auto r = run("convert --to ht 'h[3,1]'");
    CHECK(r.exitCode == 0);
    CHECK(r.output ==
          "ht[1] : 1\n"
          "ht[1,1] : 3\n"
          "ht[1,1,1] : 1\n"
          "ht[2,1] : 1\n"
          "ht[3,1] : 1\n");
}

TEST_CASE("convert emits json on request") {
    auto r = run("--format json convert --to st 'h[2,1]'");
    CHECK(r.exitCode == 0);
    json out = json::parse(r.output);
    CHECK(out["command"] == "convert");
    CHECK(out["basis"] == "st");
    REQUIRE(out["terms"].size() == 6);
    CHECK(out["terms"][0]["partition"] == json::array());
    CHECK(out["terms"][0]["coefficient"] == "4");
    CHECK(out["terms"][5]["partition"] == json::array({3}));
    CHECK(out["terms"][5]["coefficient"] == "1");
}

TEST_CASE("eval at a cycle type") {
    auto r = run("eval --cycle-type 3,3,2,2,1 'st[3,1]'");
    CHECK(r.exitCode == 0);
    CHECK(r.output == "-1\n");

    auto r2 = run("eval --cycle-type 3,3,2,2,1 'ht[3,1]'");
    CHECK(r2.exitCode == 0);
    CHECK(r2.output == "2\n");

    auto rj = run("--format json eval --cycle-type '[2,1]' 'p[1]'");
    CHECK(rj.exitCode == 0);
    CHECK(json::parse(rj.output)["value"] == "1");

    auto bad = run("eval --cycle-type 2,3 'p[1]'");
    CHECK(bad.exitCode == 2);
    CHECK(bad.output.find("error") != std::string::npos);
}

TEST_CASE("frobenius image") {
    auto r = run("frobenius -n 6 --to h 'ht[3,2]'");
    CHECK(r.exitCode == 0);
    CHECK(r.output == "h[3,2,1] : 1\n");

    auto r2 = run("frobenius -n 8 --to s 'st[3,2]'");
    CHECK(r2.exitCode == 0);
    CHECK(r2.output == "s[3,3,2] : 1\n");

    auto big = run("frobenius -n 20 'st[1]'");
    CHECK(big.exitCode == 2);
}

TEST_CASE("product kinds") {
    auto kron = run("product --kind kron 's[6,2]' 's[6,2]'");
    CHECK(kron.exitCode == 0);
    CHECK(kron.output ==
          "s[4,2,2] : 1\n"
          "s[4,3,1] : 1\n"
          "s[4,4] : 1\n"
          "s[5,1,1,1] : 1\n"
          "s[5,2,1] : 2\n"
          "s[5,3] : 1\n"
          "s[6,1,1] : 1\n"
          "s[6,2] : 2\n"
          "s[7,1] : 1\n"
          "s[8] : 1\n");

    // the ring and pointwise routes agree on character-basis inputs
    auto outer = run("product --kind outer 'ht[2,1]' 'ht[2,1]'");
    auto pointwise = run("product --kind char 'ht[2,1]' 'ht[2,1]'");
    CHECK(outer.exitCode == 0);
    CHECK(pointwise.exitCode == 0);
    CHECK(outer.output == pointwise.output);
    CHECK(outer.output.find("ht[1,1,1,1] : 4\n") != std::string::npos);

    auto converted = run("product --to s 'h[2]' 'h[1]'");
    CHECK(converted.exitCode == 0);
    CHECK(converted.output == "s[2,1] : 1\ns[3] : 1\n");
}

TEST_CASE("character polynomial printing") {
    auto r = run("charpoly 3");
    CHECK(r.exitCode == 0);
    CHECK(r.output == "1/6*x1^3 - x1^2 + x1*x2 + 5/6*x1 - x2 + x3\n");

    auto empty = run("charpoly '[]'");
    CHECK(empty.exitCode == 0);
    CHECK(empty.output == "1\n");

    auto bracketed = run("charpoly '[3]'");
    CHECK(bracketed.output == r.output);
}

TEST_CASE("golden suite") {
    auto r = run("golden");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("27/27 cases passed") != std::string::npos);
    CHECK(r.output.find("[FAIL]") == std::string::npos);

    auto one = run("golden --case h21-st");
    CHECK(one.exitCode == 0);
    CHECK(one.output.find("[PASS] h21-st") != std::string::npos);
    CHECK(one.output.find("1/1 cases passed") != std::string::npos);

    // the harness must actually be able to fail
    auto perturbed = run("golden --perturb");
    CHECK(perturbed.exitCode == 3);
    CHECK(perturbed.output.find("[FAIL]") != std::string::npos);

    auto unknown = run("golden --case no-such-case");
    CHECK(unknown.exitCode == 2);
}

TEST_CASE("usage and validation errors exit with 2") {
    CHECK(run("convert --to h 'h[2,3'").exitCode == 2);
    CHECK(run("convert --to h 'h[2,3'").output.find("parse error") != std::string::npos);
    CHECK(run("convert --to q 'h[1]'").exitCode == 2);
    CHECK(run("convert 'h[1]'").exitCode == 2);          // missing --to
    CHECK(run("").exitCode == 2);                        // missing subcommand
    CHECK(run("bogus").exitCode == 2);
    CHECK(run("--max-degree 4 convert --to p 'h[3,2]'").exitCode == 2);
    CHECK(run("--max-degree 4 convert --to p 'h[2,2]'").exitCode == 0);
    CHECK(run("product --kind sideways 'h[1]' 'h[1]'").exitCode == 2);
    CHECK(run("--help").exitCode == 0);
}

TEST_CASE("table cache round-trip through the environment") {
    fs::path dir = fs::temp_directory_path() / "symchar_cli_cache_test";
    fs::remove_all(dir);
    std::string env = "SYMCHAR_CACHE_DIR='" + dir.string() + "'";

    auto first = run("convert --to st 'h[2,1]'", env);
    CHECK(first.exitCode == 0);
    REQUIRE(fs::exists(dir / "tables.txt"));

    auto second = run("convert --to st 'h[2,1]'", env);
    CHECK(second.exitCode == 0);
    CHECK(second.output == first.output);

    std::ofstream out(dir / "tables.txt", std::ios::trunc);
    out << "garbage header\n";
    out.close();
    auto corrupt = run("convert --to st 'h[2,1]'", env);
    CHECK(corrupt.exitCode == 2);
    CHECK(corrupt.output.find("error") != std::string::npos);

    fs::remove_all(dir);
}
