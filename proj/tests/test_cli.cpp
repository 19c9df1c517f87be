#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the installed binary through the shell, capturing stdout.
RunResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string("\"") + MOCKMOD_CLI_PATH + "\" " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunResult run_env(const std::string& env_prefix, const std::string& args) {
    const std::string cmd = env_prefix + " \"" + MOCKMOD_CLI_PATH + "\" " +
                            args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

long count_lines(const std::string& s) {
    long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("expand prints pinned plain expansions") {
    auto r = run_cli("expand --form delta --terms 5 --format plain");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1\n2 -24\n3 252\n4 -1472\n");

    auto e = run_cli("expand --form eisenstein --k 4 --terms 3");
    CHECK(e.exit_code == 0);
    CHECK(e.out == "0 1\n1 240\n2 2160\n");

    auto t = run_cli("expand --form eichler --terms 5");
    CHECK(t.exit_code == 0);
    CHECK(t.out == "1 1\n2 -3/256\n3 28/19683\n4 -23/65536\n");
}

TEST_CASE("expand emits p-adic encodings") {
    auto r = run_cli("expand --form eisenstein --k 4 --terms 3 --ring padic "
                     "--p 3 --precision 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 0:1:6\n1 1:80:6\n2 3:80:6\n");
}

TEST_CASE("expand emits json with the series metadata") {
    auto r = run_cli("expand --form j --terms 3 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["form"] == "j");
    CHECK(j["params"] == "terms=3");
    CHECK(j["ring"] == "rational");
    CHECK(j["minExp"] == -1);
    CHECK(j["precBound"] == 3);
    REQUIRE(j["coefficients"].size() == 4);
    CHECK(j["coefficients"][0][0] == -1);
    CHECK(j["coefficients"][0][1] == "1");
    CHECK(j["coefficients"][1][1] == "744");
    CHECK(j["coefficients"][2][1] == "196884");
    CHECK(j["coefficients"][3][1] == "21493760");
}

TEST_CASE("expand assembles the truncated limit series") {
    auto r = run_cli("expand --form f-alpha-delta --p 3 --l 1 --terms 3 "
                     "--precision 16");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 4); // window [-1, 3)
    CHECK(r.out.substr(0, 3) == "-1 ");

    // too few mantissa digits for the certified target: precision failure
    auto bad = run_cli("expand --form f-alpha-delta --p 3 --l 1 --terms 3 "
                       "--precision 12");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("expand").exit_code == 2); // --form is required
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("expand --form no-such-form --terms 3").exit_code == 2);
    CHECK(run_cli("expand --form delta --terms 3 --ring brak").exit_code == 2);
    CHECK(run_cli("expand --form delta --terms 3 --format bad").exit_code == 2);
    CHECK(run_cli("expand --form eichler --terms 3 --ring padic").exit_code ==
          2);
    CHECK(run_cli("verify --check no-such-check").exit_code == 2);
}

TEST_CASE("window and precision failures exit 3") {
    // root splitting cannot certify the split with 2 mantissa digits
    CHECK(run_cli("verify --check thm-1-2-mod27 --precision 2 --terms 20")
              .exit_code == 3);
}

TEST_CASE("verify runs a single named check") {
    auto ok = run_cli("verify --check e23cong --terms 80");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("PASS e23cong") != std::string::npos);
    CHECK(ok.out.find("summary: 1 passed, 0 failed") != std::string::npos);

    // one power of 3 deeper than the truth: fails with exit 1
    auto deeper = run_cli("verify --check e23cong --terms 80 --m 4");
    CHECK(deeper.exit_code == 1);
    CHECK(deeper.out.find("FAIL e23cong") != std::string::npos);
    CHECK(deeper.out.find("summary: 0 passed, 1 failed") != std::string::npos);
}

TEST_CASE("checks lists the registry") {
    auto r = run_cli("checks");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) >= 20);
    CHECK(r.out.find("thm-1-2-mod27") != std::string::npos);
    CHECK(r.out.find("rp-principal-part") != std::string::npos);
    CHECK(r.out.find("(p=5)") != std::string::npos);
}

TEST_CASE("report writes the JSON suite summary") {
    const std::string out = "cli_report_p5.json";
    fs::remove(out);
    auto r = run_cli("report --p 5 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("report written to " + out) != std::string::npos);
    std::ifstream in(out);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    REQUIRE(j.is_array());
    CHECK(j.size() == 2); // the p=5 suite: principal part + root split
    for (const auto& rep : j) {
        CHECK(rep["pass"] == true);
        CHECK(rep["p"] == 5);
    }
    in.close();
    fs::remove(out);
}

TEST_CASE("disk cache round trip") {
    const std::string dir = "cli_cache_dir";
    fs::remove_all(dir);
    const std::string args =
        "expand --form delta --terms 6 --cache-dir " + dir;
    auto first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(fs::exists(dir + "/delta__terms=2000__rational.qs"));
    auto second = run_cli(args);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.substr(0, 4) == "1 1\n");

    // narrower request served from the same entry
    auto narrow = run_cli("expand --form delta --terms 4 --cache-dir " + dir);
    CHECK(narrow.exit_code == 0);
    CHECK(narrow.out == "1 1\n2 -24\n3 252\n");
    fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
    const std::string dir = "cli_env_cache_dir";
    fs::remove_all(dir);
    auto r = run_env("MOCKMOD_CACHE_DIR=" + dir,
                     "expand --form eisenstein --k 6 --terms 4");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir + "/eisenstein__k=6_terms=2000__rational.qs"));
    fs::remove_all(dir);
}
