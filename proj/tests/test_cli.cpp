#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "polarbf/fileio.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = POLARBF_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "polarbf_cli_test_out.txt";
    const std::string cmd = kCli + " " + args + " >" + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream is(out);
    std::stringstream ss;
    ss << is.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

}  // namespace

TEST_CASE("construct writes a parseable function file") {
    const fs::path file = fs::temp_directory_path() / "polarbf_c2_m2.fn";
    const auto r = run("construct --family c2 --m 2 --out " + file.string());
    REQUIRE(r.exit_code == 0);
    const auto ff = polarbf::read_function_file(file.string());
    CHECK(ff.n == 4);
    CHECK(ff.tt.weight() == 8);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("construct --family nosuch --m 2").exit_code == 2);
    CHECK(run("construct --family c2").exit_code == 2);
    CHECK(run("construct --family c1 --m 3 --shift 99").exit_code == 2);
    CHECK(run("verify nosuchtarget").exit_code == 2);
    CHECK(run("analyze --in /dev/null --format bogus").exit_code == 2);
    CHECK(run("reproduce-table --n-max 7").exit_code == 2);
}

TEST_CASE("i/o and parse errors exit with code 3") {
    CHECK(run("analyze --in /nonexistent/path.fn").exit_code == 3);
    const fs::path bad = fs::temp_directory_path() / "polarbf_bad.fn";
    std::ofstream(bad) << "n=4\ntt=zzzz\n";
    CHECK(run("analyze --in " + bad.string()).exit_code == 3);
}

TEST_CASE("analyze reports the expected metrics deterministically") {
    const fs::path file = fs::temp_directory_path() / "polarbf_c2_m2.fn";
    REQUIRE(run("construct --family c2 --m 2 --out " + file.string()).exit_code == 0);
    const auto r1 = run("analyze --in " + file.string());
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out.find("\"ai\": 2") != std::string::npos);
    CHECK(r1.out.find("\"degree\": 3") != std::string::npos);
    CHECK(r1.out.find("\"nonlinearity\": 4") != std::string::npos);
    CHECK(r1.out.find("\"balanced\": true") != std::string::npos);
    const auto r2 = run("analyze --in " + file.string());
    CHECK(r1.out == r2.out);
}

TEST_CASE("analyze skips over-cap metrics with exit code 0") {
    const fs::path file = fs::temp_directory_path() / "polarbf_c2_m8.fn";
    REQUIRE(run("construct --family c2 --m 8 --out " + file.string()).exit_code == 0);
    const auto r = run("analyze --in " + file.string() +
                       " --metrics weight,ai,nonlinearity,faa");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("skipped: resource cap") != std::string::npos);
    CHECK(r.out.find("\"nonlinearity\":") != std::string::npos);
}

TEST_CASE("unbalanced family reported correctly") {
    const fs::path file = fs::temp_directory_path() / "polarbf_c1_m2.fn";
    REQUIRE(run("construct --family c1 --m 2 --out " + file.string()).exit_code == 0);
    const auto r = run("analyze --in " + file.string() + " --metrics weight,balanced");
    CHECK(r.out.find("\"balanced\": false") != std::string::npos);
    CHECK(r.out.find("\"weight\": 10") != std::string::npos);
}

TEST_CASE("verify and reproduce-table exit codes") {
    CHECK(run("verify prop3 2..6").exit_code == 0);
    CHECK(run("verify thm3 2..4").exit_code == 0);
    const auto table = run("reproduce-table --n-max 6");
    REQUIRE(table.exit_code == 0);
    CHECK(table.out.find("4,4,4,4,6,") != std::string::npos);
    CHECK(table.out.find("6,24,22,22,28,") != std::string::npos);
}
