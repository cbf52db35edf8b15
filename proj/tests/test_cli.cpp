#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BKP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("qschur subcommand") {
    auto r = run_cli("qschur --lambda 2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"4/3\"") != std::string::npos);
    CHECK(r.out.find("\"-4\"") != std::string::npos);

    auto csv = run_cli("qschur --lambda 2,1 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "mono,coeff\n1^3,4/3\n3^1,-4\n");
}

TEST_CASE("tau route equality and byte stability") {
    auto a = run_cli("tau --N 0 --hbar 1 --cutoff 5 --route both --strategy qbasis");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("\"equal\": true") != std::string::npos);
    auto b = run_cli("tau --N 0 --hbar 1 --cutoff 5 --route both --strategy qbasis");
    CHECK(a.out == b.out);
}

TEST_CASE("verify-hirota pass and located witness") {
    auto pass = run_cli("verify-hirota --N 1/3 --cutoff 8 --bidegree 4 4");
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("\"verdict\": \"pass\"") != std::string::npos);

    const char* path = "cli_negative_control.json";
    {
        std::ofstream f(path);
        f << R"({"alphabet":"T","cutoff":6,"terms":[)"
          << R"({"mono":{},"coeff":"1"},{"mono":{"1":3},"coeff":"1"}]})" << "\n";
    }
    auto fail = run_cli(std::string("verify-hirota --tau-file ") + path + " --bidegree 3 3");
    std::remove(path);
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("\"verdict\": \"fail\"") != std::string::npos);
    CHECK(fail.out.find("witness") != std::string::npos);
}

TEST_CASE("verify-cutjoin") {
    auto r = run_cli("verify-cutjoin --u 1/3 --u 1/5 --cutoff 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"tspace_equal\": true") != std::string::npos);
    CHECK(r.out.find("\"qbasis_equal\": true") != std::string::npos);
    CHECK(r.out.find("\"degree_recursion\": true") != std::string::npos);
}

TEST_CASE("verify-qsc") {
    auto r = run_cli("verify-qsc --N 0 --cutoff 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(r.out.find("\"ks_invariance\": \"pass\"") != std::string::npos);

    auto mono = run_cli("verify-qsc --w 1/3 --cutoff 8");
    CHECK(mono.exit_code == 0);
}

TEST_CASE("verify-walg") {
    auto r = run_cli("verify-walg --window 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("wave csv") {
    auto r = run_cli("wave --N 0 --cutoff 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "power,coeff\n0,1\n-1,-1/8\n-2,9/128\n-3,-75/1024\n-4,3675/32768\n");
}

TEST_CASE("hurwitz-table csv") {
    auto r = run_cli("hurwitz-table --N 0 --cutoff 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "lambda,mu,coeff\n,,1\n3,3,225/128\n2,2,9/32\n2;1,2;1,9/256\n1,1,1/8\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("qschur").exit_code == 2);                           // missing --lambda
    CHECK(run_cli("tau --N 0 --u 1/3 --cutoff 4").exit_code == 2);     // exclusive flags
    CHECK(run_cli("verify-hirota --u oops --bidegree 2 2").exit_code == 2);
}
