#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "starprof/csv.hpp"
#include "starprof/profile.hpp"
#include "verify.hpp"

using namespace starprof;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

const std::vector<std::vector<std::string>> kCommands = {
    {"spectrum", "--chain", "star", "--n", "5"},
    {"spectrum", "--chain", "rt", "--n", "6"},
    {"bound", "--n", "12", "--c", "0.0"},
    {"decompose", "--n", "20", "--c", "0", "--M", "4"},
    {"profile", "--c-min", "-4", "--c-max", "4", "--step", "0.25"},
    {"exact-tv", "--chain", "star", "--n", "6", "--t-max", "30"},
    {"compare", "--n", "5", "--c", "0"},
    {"l2", "--chain", "star", "--n", "20"},
    {"verify", "--n", "4"},
};

}  // namespace

TEST_CASE("csv formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0 / 3) == "0.333333333333");
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("pretty") == OutputFormat::pretty);
    CHECK_THROWS(parse_format("xml"));
    Table t({"a", "bb"});
    t.add_row({"1", "2"});
    std::ostringstream out;
    t.write(out, OutputFormat::csv);
    CHECK(out.str() == "a;bb\n1;2\n");
    CHECK_THROWS(t.add_row({"1"}));
}

TEST_CASE("every subcommand is deterministic") {
    for (const auto& args : kCommands) {
        CAPTURE(args.front());
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == cli::kExitOk);
        CHECK_FALSE(a.out.empty());
        CHECK(a.out == b.out);
    }
}

TEST_CASE("output headers") {
    CHECK(lines(run({"spectrum", "--chain", "star", "--n", "3"}).out).front() == "partition;eigenvalue;multiplicity;chain");
    CHECK(lines(run({"bound", "--n", "5", "--c", "0"}).out).front() == "n;c;t;tstar;total;term1;term2;term3;term4");
    CHECK(lines(run({"profile", "--c-min", "0", "--c-max", "1", "--step", "1"}).out).front() == "c;phi");
    CHECK(lines(run({"exact-tv", "--chain", "rt", "--n", "4", "--t-max", "2"}).out).front() == "n;chain;t;tv");
    CHECK(lines(run({"l2", "--chain", "rt", "--n", "10"}).out).front() == "n;chain;c;t;bound");
}

TEST_CASE("spectrum rows") {
    const auto rows = lines(run({"spectrum", "--chain", "star", "--n", "3"}).out);
    // (3): 1; (2,1): corners at rows 1 and 2; (1,1,1): one corner.
    REQUIRE(rows.size() == 5);
    CHECK(rows[1] == "3;1;1;star");
    CHECK(rows[2] == "2,1;0.666666666667;2;star");
    CHECK(rows[3] == "2,1;0;2;star");
    CHECK(rows[4] == "1,1,1;-0.333333333333;1;star");
}

TEST_CASE("thin dispatch") {
    const auto rows = lines(run({"bound", "--n", "5", "--c", "0"}).out);
    REQUIRE(rows.size() == 2);
    const auto r = comparison_bound(5, 0.0);
    const std::string want = "5;0;4;8;" + format_double(r.total) + ";" + format_double(r.parts[0]) + ";" +
                             format_double(r.parts[1]) + ";" + format_double(r.parts[2]) + ";" +
                             format_double(r.parts[3]);
    CHECK(rows[1] == want);

    const auto degenerate = lines(run({"profile", "--c-min", "0", "--c-max", "0", "--step", "1"}).out);
    REQUIRE(degenerate.size() == 2);
    CHECK(degenerate[1] == "0;" + format_double(star_profile(0).value));
    CHECK(degenerate[1] == "0;0.329753032633");

    const auto tv = lines(run({"exact-tv", "--chain", "star", "--n", "3", "--t-max", "1"}).out);
    REQUIRE(tv.size() == 3);
    CHECK(tv[1] == "3;star;0;0.833333333333");
    CHECK(tv[2] == "3;star;1;0.5");
}

TEST_CASE("exit codes") {
    CHECK(run({"verify", "--n", "5"}).code == cli::kExitOk);
    CHECK(run({"bound", "--n", "61", "--c", "0"}).code == cli::kExitGuard);
    CHECK(run({"spectrum", "--chain", "rt", "--n", "1"}).code == cli::kExitGuard);
    CHECK(run({"exact-tv", "--chain", "rt", "--n", "9", "--t-max", "3"}).code == cli::kExitGuard);
    CHECK(run({"compare", "--n", "9", "--c", "0"}).code == cli::kExitGuard);
    CHECK(run({"decompose", "--n", "30", "--c", "0", "--M", "0"}).code == cli::kExitGuard);
    CHECK(run({"profile", "--c-min", "-9", "--c-max", "0", "--step", "1"}).code == cli::kExitGuard);
    CHECK(run({"l2", "--chain", "rt", "--n", "61"}).code == cli::kExitGuard);
    CHECK(run({"verify", "--n", "13"}).code == cli::kExitGuard);

    const auto usage = run({"bound", "--n", "5", "--bogus"});
    CHECK(usage.code == cli::kExitUsage);
    CHECK_FALSE(usage.err.empty());
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"shuffle"}).code == cli::kExitUsage);
    CHECK(run({"bound", "--n", "five"}).code == cli::kExitUsage);
    CHECK(run({"spectrum", "--chain", "riffle", "--n", "4"}).code == cli::kExitUsage);
    CHECK(run({"bound", "--n", "5", "--format", "xml"}).code == cli::kExitUsage);
}

TEST_CASE("output options") {
    const auto path = std::filesystem::temp_directory_path() / "starprof_cli_test.csv";
    std::filesystem::remove(path);
    const auto r = run({"profile", "--c-min", "0", "--c-max", "2", "--step", "1", "--out", path.string()});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == run({"profile", "--c-min", "0", "--c-max", "2", "--step", "1"}).out);
    std::filesystem::remove(path);

    const auto pretty = run({"profile", "--c-min", "0", "--c-max", "1", "--step", "1", "--format", "pretty"});
    CHECK(pretty.code == cli::kExitOk);
    CHECK(pretty.out.find(';') == std::string::npos);
}

TEST_CASE("verify suite") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& check : cli::verify_suite(n)) {
            CAPTURE(n);
            CAPTURE(check.name);
            CAPTURE(check.detail);
            CHECK(check.status != cli::CheckStatus::fail);
        }
    CHECK_THROWS(cli::verify_suite(13));
}
