#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

#ifndef KAM_CLI_PATH
#error "KAM_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(KAM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("normalize straightens through the quotient") {
    auto r = run_cli("normalize --prime 3 --flavor tildeK \"e6 e0\"");
    CHECK(r.status == 0);
    CHECK(r.out == "e0 e2\n");
    auto z = run_cli("normalize --prime 3 --flavor hatK \"e1 e3\"");
    CHECK(z.status == 0);
    CHECK(z.out == "0\n");
    auto free_side = run_cli("normalize --prime 3 --flavor tildeU \"e6 e0\"");
    CHECK(free_side.status == 0);
    CHECK(free_side.out == "e6 e0\n");
    auto coeffs = run_cli("normalize --prime 5 --flavor hatU \"2 e1 + 3 e1\"");
    CHECK(coeffs.status == 0);
    CHECK(coeffs.out == "0\n");
}

TEST_CASE("basis listing with a count line") {
    auto r = run_cli("basis --prime 3 --flavor tildeK --length 2 --topdeg 12");
    CHECK(r.status == 0);
    CHECK(r.out == "e0 e2\ncount 1\n");
    auto empty = run_cli("basis --prime 3 --flavor tildeK --length 2 --topdeg 20");
    CHECK(empty.status == 0);
    CHECK(empty.out == "count 0\n");
    auto free_side = run_cli("basis --prime 3 --flavor tildeU --length 2 --topdeg 12");
    CHECK(free_side.status == 0);
    CHECK(free_side.out == "e0 e2\ne6 e0\ncount 2\n");
}

TEST_CASE("nishida action through the command line") {
    auto r = run_cli("nishida --prime 3 --flavor tildeU --d 1 \"e4\"");
    CHECK(r.status == 0);
    CHECK(r.out == "e2\n");
}

TEST_CASE("steenrod operation on a named dual generator") {
    auto r = run_cli("steenrod --prime 3 --n 2 --j 1 --generator c1");
    CHECK(r.status == 0);
    CHECK(r.out == "(e2 e2)*\n");
}

TEST_CASE("dual generator with the projection applied") {
    auto r = run_cli("dual --prime 3 --n 2 --generator c1 --map sigma");
    CHECK(r.status == 0);
    CHECK(r.out == "(e0 e2)* + (e6 e0)*\n");
}

TEST_CASE("invariant dimension listing") {
    auto r = run_cli("invariants --prime 3 --group gl --vars 1 --max-deg 8");
    CHECK(r.status == 0);
    CHECK(r.out == "t=0 dim=1\nt=2 dim=0\nt=4 dim=1\nt=6 dim=0\nt=8 dim=1\n");
}

TEST_CASE("verify suite runs and reports counts") {
    auto r = run_cli("verify eta");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS eta/") != std::string::npos);
    CHECK(r.out.find("failed 0") != std::string::npos);
}

TEST_CASE("json output is byte-stable across runs") {
    std::string cmd = "--format json normalize --prime 3 --flavor tildeK \"e6 e0\"";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"prime\": 3") != std::string::npos);
    CHECK(a.out.find("\"flavor\": \"tildeK\"") != std::string::npos);
    CHECK(a.out.find("\"command\": \"normalize\"") != std::string::npos);
    CHECK(a.out.find("\"monomial\"") != std::string::npos);
}

TEST_CASE("usage problems exit with code 2") {
    CHECK(run_cli("normalize --prime 3 --flavor bogus \"e0\"").status == 2);
    CHECK(run_cli("normalize --prime 4 --flavor hatU \"e0\"").status == 2);
    CHECK(run_cli("normalize --prime 3 --flavor hatU \"e+\"").status == 2);
    CHECK(run_cli("verify no-such-suite").status == 2);
    CHECK(run_cli("").status == 2);
    // d generators belong to the U/K side only
    CHECK(run_cli("normalize --prime 3 --flavor hatU \"d2\"").status == 2);
}

TEST_CASE("resource caps exit with code 3") {
    CHECK(run_cli("basis --prime 3 --flavor tildeK --length 99 --topdeg 12").status == 3);
    CHECK(run_cli("normalize --prime 1009 --flavor hatU \"e0\"").status == 3);
    CHECK(run_cli("primitives --prime 3 --flavor tildeK --length 7 --max-topdeg 16").status == 3);
}

TEST_CASE("help is not an error") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("normalize --help").status == 0);
}
