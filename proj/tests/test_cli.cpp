#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#ifndef RACKH_CLI_PATH
#error "RACKH_CLI_PATH must point at the built binary"
#endif
#ifndef RACKH_DATA_DIR
#error "RACKH_DATA_DIR must point at the sample tables"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string &args) {
    static int counter = 0;
    fs::path cap = fs::temp_directory_path() / ("rackh-cli-test-" + std::to_string(++counter) + ".out");
    std::string cmd = std::string("\"") + RACKH_CLI_PATH + "\" " + args + " > \"" + cap.string() + "\" 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
#ifdef _WIN32
    r.exit_code = status;
#else
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    std::ifstream in(cap);
    std::ostringstream os;
    os << in.rdbuf();
    r.output = os.str();
    fs::remove(cap);
    return r;
}

std::string data(const std::string &name) { return std::string(RACKH_DATA_DIR) + "/" + name; }

fs::path write_temp(const std::string &content) {
    static int counter = 0;
    fs::path p = fs::temp_directory_path() / ("rackh-cli-input-" + std::to_string(++counter) + ".json");
    std::ofstream(p) << content;
    return p;
}

} // namespace

TEST_CASE("cohomology subcommand on the sample tables") {
    RunResult r = run_cli("cohomology --structure " + data("point.json") + " --complex rack --degree 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"betti\": 1") != std::string::npos);
    CHECK(r.output.find("\"schema\": 1") != std::string::npos);

    r = run_cli("cohomology --structure " + data("conj-s3.json") + " --complex rack --degree 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"betti\": 3") != std::string::npos);

    r = run_cli("cohomology --group " + data("s3.json") + " --complex group --degree 1 --coeff Z/2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"torsion\": [") != std::string::npos);
    CHECK(r.output.find("2") != std::string::npos);

    r = run_cli("cohomology --group " + data("z4.json") + " --complex group --degree 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"betti\": 0") != std::string::npos);

    // matrices are included on demand
    r = run_cli("cohomology --structure " + data("point.json") + " --complex rack --degree 1 --matrices");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"d_out\"") != std::string::npos);
}

TEST_CASE("identity checks exit zero when everything holds") {
    CHECK(run_cli("products-check --structure " + data("dihedral3.json") + " --max-degree 3").exit_code == 0);
    CHECK(run_cli("morphism-check --group " + data("z4.json") + " --coeff Z/2 --max-degree 2").exit_code == 0);
    CHECK(run_cli("nerve-check --structure " + data("trivial3.json") + " --max-degree 2").exit_code == 0);
}

TEST_CASE("shuffle subcommand lists signed permutations") {
    RunResult r = run_cli("shuffle --p1 2 --p2 2 --class top");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"sign\"") != std::string::npos);
}

TEST_CASE("malformed input exits with code 2") {
    fs::path bad = write_temp(R"({"schema": 1, "kind": "rack", "size": 2, "table": [[0, 1]]})");
    CHECK(run_cli("cohomology --structure " + bad.string() + " --complex rack --degree 1").exit_code == 2);
    fs::remove(bad);

    fs::path not_rack = write_temp(R"({"schema": 1, "kind": "rack", "size": 2, "table": [[0, 0], [1, 1]]})");
    CHECK(run_cli("cohomology --structure " + not_rack.string() + " --complex rack --degree 1").exit_code == 2);
    fs::remove(not_rack);

    fs::path junk = write_temp("not json at all {");
    CHECK(run_cli("cohomology --structure " + junk.string() + " --complex rack --degree 1").exit_code == 2);
    fs::remove(junk);

    CHECK(run_cli("cohomology --structure /nonexistent.json --complex rack --degree 1").exit_code == 2);
    CHECK(run_cli("cohomology --structure " + data("point.json") + " --degree 1 --coeff Z/1").exit_code == 2);
    CHECK(run_cli("cohomology --structure " + data("point.json") + " --degree 1 --coeff mat2/Z2").exit_code == 2);
    // rack table fed to the group complex
    CHECK(run_cli("cohomology --structure " + data("dihedral3.json") + " --complex group --degree 1").exit_code == 2);
    // unknown flags and missing requireds are usage errors
    CHECK(run_cli("cohomology --degree 1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
