#include <catch2/catch.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "mpulam/core.hpp"

// Drives the installed binary end to end: wire formats, exit codes, and the
// stability of JSON reports.

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(MPULAM_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("distance command", "[cli]") {
    const CliResult text = run_cli("distance --a 2,1,2,1,3,3 --b 3,2,2,1,3,1 --r 2");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("distance 2") != std::string::npos);
    CHECK(text.out.find("lcs 4") != std::string::npos);

    const CliResult same = run_cli("distance --a 1,2,1,2 --b 1,2,1,2 --r 2");
    CHECK(same.exit_code == 0);
    CHECK(same.out.find("distance 0") != std::string::npos);

    const CliResult as_json = run_cli("distance --a 2,1,2,1,3,3 --b 3,2,2,1,3,1 --r 2 --format json");
    REQUIRE(as_json.exit_code == 0);
    const auto doc = parse_json(as_json.out);
    CHECK(doc["distance"] == 2);
    CHECK(doc["lcs"] == 4);
    CHECK(doc["config"]["subcommand"] == "distance");
    CHECK(doc["config"]["r"] == 2);

    // permutation inputs are auto-detected and projected under --r
    const CliResult projected = run_cli("distance --a 1,5,2,4,3,6 --b 1,2,3,4,5,6 --r 2 --project");
    CHECK(projected.exit_code == 0);

    CHECK(run_cli("distance --a 1,x,2 --b 1,2,3").exit_code == 2);
    CHECK(run_cli("distance --a 1,1,2,2 --b 1,1,2,2,3,3 --r 2").exit_code == 2);
    CHECK(run_cli("distance --a 1,3,2,2 --b 1,1,2,2 --r 2").exit_code == 2);
}

TEST_CASE("sphere command", "[cli]") {
    const CliResult all = run_cli("sphere --identity --n 6 --r 2 --t 1 --method all");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("formula 11") != std::string::npos);
    CHECK(all.out.find("rsk 11") != std::string::npos);
    CHECK(all.out.find("enumerated 11") != std::string::npos);
    CHECK(all.out.find("agreement yes") != std::string::npos);

    const CliResult worked =
        run_cli("sphere --center 1,1,1,2,3,2,3,2,4,4,3,4 --r 3 --t 1 --method all --format json");
    REQUIRE(worked.exit_code == 0);
    const auto doc = parse_json(worked.out);
    CHECK(doc["agree"] == true);
    CHECK(doc["sizes"]["formula"] == "72");
    CHECK(doc["sizes"]["enumerated"] == "72");
    CHECK(doc["duplication_report"]["size_d"] == 48);
    CHECK(doc["duplication_report"]["size_e"] == 2);
    CHECK(doc["duplication_report"]["center"] == "1,1,1,2,3,2,3,2,4,4,3,4");

    const CliResult zero = run_cli("sphere --identity --n 6 --r 2 --t 0 --method enumerate");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.find("enumerated 1") != std::string::npos);

    CHECK(run_cli("sphere --center 1,2,1,3,2,3 --r 2 --t 1 --method rsk").exit_code == 2);
    CHECK(run_cli("sphere --identity --n 6 --r 2 --t 2 --method formula").exit_code == 2);
}

TEST_CASE("bounds command", "[cli]") {
    const CliResult table = run_cli("bounds --n 6 --r 2 --d 3 --format json");
    REQUIRE(table.exit_code == 0);
    const auto doc = parse_json(table.out);
    CHECK(doc["space_size"] == "90");
    bool saw_packing = false;
    for (const auto& row : doc["bounds"]) {
        if (row["bound_kind"] == "sphere_packing_upper") {
            saw_packing = true;
            CHECK(row["status"] == "ok");
            CHECK(row["bound_integer"] == "8");
            CHECK(row["bound_rational"] == "90/11");
        }
    }
    CHECK(saw_packing);

    // n/r = 2 rows are marked, not fatal.
    const CliResult gated = run_cli("bounds --n 6 --r 3 --d 2 --format json");
    REQUIRE(gated.exit_code == 0);
    for (const auto& row : parse_json(gated.out)["bounds"]) {
        if (row["bound_kind"] == "gv_lower")
            CHECK(row["status"] == "not covered by bound hypothesis");
    }

    const CliResult d1 = run_cli("bounds --n 6 --r 2 --d 1 --format json");
    REQUIRE(d1.exit_code == 0);
    for (const auto& row : parse_json(d1.out)["bounds"]) {
        if (row["bound_kind"] == "gv_lower") CHECK(row["bound_integer"] == "90");
    }
}

TEST_CASE("scan-extremes command", "[cli]") {
    const CliResult scan = run_cli("scan-extremes --n 6 --r 2 --format json");
    REQUIRE(scan.exit_code == 0);
    const auto doc = parse_json(scan.out);
    CHECK(doc["min_size"] == 11);
    CHECK(doc["min_center"] == "1,1,2,2,3,3");
    CHECK(doc["max_size"] == 20);
}

TEST_CASE("greedy-code command", "[cli]") {
    const std::string path = "greedy_cli_test_code.txt";
    const CliResult greedy =
        run_cli("greedy-code --n 6 --r 2 --d 2 --out " + path + " --format json");
    REQUIRE(greedy.exit_code == 0);
    const auto doc = parse_json(greedy.out);
    CHECK(doc["size"].get<std::size_t>() >= 5);
    CHECK(doc["min_distance"].get<int>() >= 2);
    CHECK(doc["gv_lower"]["bound_integer"] == "5");

    std::ifstream file(path);
    REQUIRE(file.good());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(file, line)) {
        CHECK(mpulam::is_multipermutation_tuple(mpulam::parse_tuple(line), 2));
        ++lines;
    }
    CHECK(lines == doc["size"].get<std::size_t>());
    std::remove(path.c_str());
}

TEST_CASE("enumerate command", "[cli]") {
    const CliResult stream = run_cli("enumerate --n 4 --r 2");
    CHECK(stream.exit_code == 0);
    CHECK(stream.out.find("1,1,2,2\n") != std::string::npos);
    CHECK(stream.out.find("2,2,1,1") != std::string::npos);

    const CliResult limited = run_cli("enumerate --n 4 --r 2 --limit 3 --format json");
    REQUIRE(limited.exit_code == 0);
    CHECK(parse_json(limited.out)["tuples"].size() == 3);

    const CliResult histogram = run_cli("enumerate --n 6 --r 1 --histogram --t 1");
    CHECK(histogram.exit_code == 0);
    CHECK(histogram.out.find("26,720") != std::string::npos);

    const CliResult matrix = run_cli("enumerate --n 4 --r 2 --matrix --format json");
    REQUIRE(matrix.exit_code == 0);
    CHECK(parse_json(matrix.out)["labels"].size() == 6);
}

TEST_CASE("verify command", "[cli]") {
    const CliResult metric = run_cli("verify --n-max 4 --suite metric");
    CHECK(metric.exit_code == 0);
    CHECK(metric.out.find("all checks passed") != std::string::npos);

    // Seeded runs are reproducible byte for byte.
    const CliResult again = run_cli("verify --n-max 4 --suite metric");
    CHECK(again.out == metric.out);

    const CliResult as_json = run_cli("verify --n-max 4 --suite rsk --format json");
    REQUIRE(as_json.exit_code == 0);
    const auto doc = parse_json(as_json.out);
    CHECK(doc["passed"] == true);
    for (const auto& check : doc["checks"]) CHECK(check["status"] == "pass");
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("sphere --r 2").exit_code == 2);            // neither --center nor --identity
    CHECK(run_cli("bounds --n 6 --r 4 --d 2").exit_code == 2);  // r does not divide n
}
