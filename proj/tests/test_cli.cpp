// Golden-file tests for the CLI: every subcommand runs against checked-in
// fixtures and its report (minus the perf block) must match byte-for-byte.
// Regenerate with RAMSEY_REGEN=1 after an intentional schema change.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

const std::string kBin = RAMSEY_CLI_BIN;
const std::string kTestDir = RAMSEY_TEST_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = kBin + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int st = pclose(pipe);
    res.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return res;
}

json strip_perf(const std::string& text) {
    json j = json::parse(text);
    j.erase("perf");
    return j;
}

bool regen() { return std::getenv("RAMSEY_REGEN") != nullptr; }

// runs the command, checks the exit code, and compares the perf-stripped
// report against tests/golden/<name>.json
void golden_case(const std::string& name, const std::string& args, int want_exit) {
    CAPTURE(name);
    CAPTURE(args);
    RunResult res = run_cli(args);
    CHECK(res.exit_code == want_exit);
    json got = strip_perf(res.out);
    std::string path = kTestDir + "/golden/" + name + ".json";
    if (regen()) {
        std::ofstream out(path);
        out << got.dump(2) << '\n';
        return;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), ("missing golden file " + path).c_str());
    json want = json::parse(in);
    CHECK(got == want);
}

std::string fixture(const std::string& name) { return kTestDir + "/fixtures/" + name; }

}  // namespace

TEST_CASE("golden: set computations") {
    golden_case("fs", "fs --seq \"2 3 5\"", 0);
    golden_case("fp", "fp --seq \"2 3 5\"", 0);
    golden_case("fep", "fep --seq \"2 3 4\"", 0);
    golden_case("fep_search", "fep --search --range 2 6 --size 2 --rule mod:2:0,1", 0);
    golden_case("sumsub_check", "sumsub-check --y \"3 12\" --x \"1 2 4 8\"", 0);
    golden_case("sumsub_check_absent", "sumsub-check --y 5 --x \"1 2\"", 1);
}

TEST_CASE("golden: coloring searches") {
    golden_case("find_config", "find-config --coloring " + fixture("parity9.txt") + " --poly d", 0);
    golden_case("threshold_vdw", "threshold --kind vdw --k 3 --r 2 --max 20", 0);
    golden_case("threshold_poly", "threshold --kind poly --family d^2 --r 2 --max 10", 0);
    golden_case("schur_threshold", "schur --threshold --r 2 --op add --max 10", 0);
    golden_case("schur_find", "schur --coloring " + fixture("parity9.txt") + " --op add", 0);
    golden_case("exp_search", "exp-search --rule mod:2:0,1 --x-max 6 --y-max 6", 0);
}

TEST_CASE("golden: cube searches") {
    golden_case("hj_search", "hj-search --coloring " + fixture("hj_diag.txt"), 0);
    golden_case("hj_number", "hj-number --r 2 --t 2 --max 4", 0);
    golden_case("phj_search", "phj-search --coloring " + fixture("phj_coord.txt"), 0);
    golden_case("phj_embed",
                "phj-embed --q 3 --N 2 --d 2 --xs \"1 2\" --gamma \"1 2\" --coeffs \"2 2\"", 0);
}

TEST_CASE("golden: window verifiers") {
    golden_case("config_R", "config-R --set " + fixture("full12.txt") + " --poly d --g 1 --L 4", 0);
    golden_case("ipstar_check", "ipstar-check --set " + fixture("odds20.txt") + " --r 2", 1);
    golden_case("ipstar_holds", "ipstar-check --set " + fixture("full12.txt") + " --r 2", 0);
    golden_case("ipr_verify",
                "ipr-verify --set " + fixture("full12.txt") + " --poly d --g 1 --L 4 --r-max 3", 0);
    golden_case("sumsub_search",
                "sumsub-search --set " + fixture("full40.txt") + " --x \"2 3 5\" --poly d --N 2",
                0);
    golden_case("sumsub_search_b",
                "sumsub-search --set " + fixture("full40.txt") + " --product-set " +
                    fixture("pow2_40.txt") + " --x \"2 2 3\" --poly d --N 2",
                0);
}

TEST_CASE("golden: towers") {
    golden_case("tower_star", "tower --star \"2 3 5\"", 0);
    golden_case("tower_f", "tower --f \"3 3\"", 0);
    golden_case("tower_eval", "tower --eval \"(^ 2 (^ 3 2))\"", 0);
    golden_case("pf_pattern", "pf-pattern --n 2 --xs \"2 3\" --family \"d;d^2\" --k-max 2", 0);
    golden_case("pf_lambda", "pf-pattern --lambda --a \"1 2\" --N 1 --rule mod:2:0,1", 1);
}

TEST_CASE("witness files round trip through the CLI") {
    std::string wpath = "/tmp/ramsey_test_witness.json";
    auto made = run_cli("find-config --coloring " + fixture("parity9.txt") +
                        " --poly d --witness-out " + wpath);
    REQUIRE(made.exit_code == 0);
    golden_case("verify_witness",
                "verify-witness --witness " + wpath + " --coloring " + fixture("parity9.txt"), 0);

    // tampering flips the verdict
    {
        std::ifstream in(wpath);
        json w = json::parse(in);
        w["elements"][1] = "5";
        std::ofstream out(wpath);
        out << w.dump(2) << '\n';
    }
    auto bad = run_cli("verify-witness --witness " + wpath + " --coloring " + fixture("parity9.txt"));
    CHECK(bad.exit_code == 1);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run_cli("nonsense").exit_code == 64);
    CHECK(run_cli("fs").exit_code == 64);                // missing --seq
    CHECK(run_cli("fs --seq \"2 x\"").exit_code == 64);  // bad token
    CHECK(run_cli("find-config --coloring /nonexistent --poly d").exit_code == 64);
    CHECK(run_cli("threshold --kind poly --family 5 --r 2 --max 5").exit_code == 64);
}

TEST_CASE("reports are deterministic and worker independent") {
    auto strip = [](const RunResult& r) { return strip_perf(r.out); };
    std::string cmd = "threshold --kind vdw --k 3 --r 2 --max 12";
    auto a = run_cli(cmd + " --workers 1");
    auto b = run_cli(cmd + " --workers 2");
    auto c = run_cli(cmd + " --workers 8");
    auto d = run_cli(cmd + " --workers 8");
    CHECK(strip(a) == strip(b));
    CHECK(strip(a) == strip(c));
    CHECK(strip(c) == strip(d));

    std::string ip = "ipstar-check --set " + fixture("odds20.txt") + " --r 3";
    CHECK(strip(run_cli(ip + " --workers 1")) == strip(run_cli(ip + " --workers 8")));
}

TEST_CASE("capped runs exit 2") {
    auto res = run_cli("threshold --kind vdw --k 3 --r 2 --max 20 --max-nodes 10");
    CHECK(res.exit_code == 2);
    json j = strip_perf(res.out);
    CHECK(j["status"] == "capped");
}
