#include <doctest.h>

#include "brauerkit/parse.hpp"
#include "brauerkit/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace brauerkit;

namespace {

struct CmdResult {
    int exit_code;
    std::string output;
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("BRAUERKIT_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/brauerkit_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* kFermatDoc =
    "# Fermat quartic\n"
    "kind: complete_intersection\n"
    "vars: x0 x1 x2 x3\n"
    "poly: x0^4 + x1^4 + x2^4 + x3^4\n"
    "prime: 5\n"
    "order: 11\n"
    "hmax: 1\n"
    "outputs: height\n";

}  // namespace

TEST_CASE("job parsing") {
    JobSpec job = parse_job(kFermatDoc);
    CHECK(job.kind == JobSpec::Kind::CompleteIntersection);
    CHECK(job.prime == 5);
    CHECK(job.order == 11);
    CHECK(job.vars.size() == 4);
    CHECK(job.polys.size() == 1);

    CHECK_THROWS_AS(parse_job("vars: x\n"), ParseError);           // missing kind
    CHECK_THROWS_AS(parse_job("kind: nonsense\n"), ParseError);    // unknown kind
    CHECK_THROWS_AS(parse_job("bad line\n"), ParseError);          // no colon
    CHECK_THROWS_AS(parse_job("kind: double_plane\nprime: x\n"), ParseError);
    // order <= p^hmax with height requested
    CHECK_THROWS_AS(parse_job("kind: double_plane\nprime: 5\norder: 5\nhmax: 1\n"
                              "outputs: height\n"),
                    ParseError);
}

TEST_CASE("empty polynomial is a parse error at position 0") {
    RingPtr R = Ring::poly(Ring::integers(), {"x"});
    try {
        parse_poly("", R);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.col == 0);
    }
    try {
        parse_job("kind: double_plane\npoly: \n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.col == 0);
        CHECK(e.line == 2);
    }
}

TEST_CASE("poly parse errors carry line and column") {
    RingPtr R = Ring::poly(Ring::integers(), {"x", "y"});
    try {
        parse_poly("x + z", R, 7);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        CHECK(e.col == 5);
    }
    CHECK_THROWS_AS(parse_poly("x +", R), ParseError);
    CHECK_THROWS_AS(parse_poly("x ^ y", R), ParseError);
    CHECK_THROWS_AS(parse_poly("(x + y", R), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1", R), ParseError);  // not the Laurent variable
}

TEST_CASE("poly parser grammar") {
    RingPtr R = Ring::poly(Ring::integers(), {"x", "y"});
    CHECK(parse_poly("2x^2y", R) == parse_poly("2*x^2*y", R));
    CHECK(parse_poly("(x+y)^2", R).to_string() == "x^2 + 2*x*y + y^2");
    CHECK(parse_poly("-x - -2", R).to_string() == "-x + 2");
    RingPtr Rt = Ring::poly(Ring::prime_field(5), {"t"}, 0);
    CHECK(parse_poly("4t^-2", Rt).to_string() == "4*t^-2");
}

TEST_CASE("canonical rendering re-parses to an equal value") {
    RingPtr R = Ring::poly(Ring::integers(), {"x", "y", "z"});
    for (const char* src :
         {"x^2*y - 3*z + 7", "-x + y - z", "x*y*z - x^3 + 2*y^2*z^4 - 11", "0", "-42"}) {
        MultiPoly p = parse_poly(src, R);
        CHECK(parse_poly(p.to_string(), R) == p);
    }
    RingPtr Rt = Ring::poly(Ring::prime_field(7), {"t", "a"}, 0);
    for (const char* src : {"t^-3*a + 2*t^2", "3*t^-1 + a^2", "t^-2 - t^2"}) {
        MultiPoly p = parse_poly(src, Rt);
        CHECK(parse_poly(p.to_string(), Rt) == p);
    }
}

TEST_CASE("run_job is deterministic") {
    JobSpec job = parse_job(kFermatDoc);
    JobResult a = run_job(job);
    JobResult b = run_job(job);
    CHECK(a.text == b.text);
    CHECK(a.machine == b.machine);
    CHECK(a.text.find("h=1") != std::string::npos);
    CHECK(a.machine.find("\"schema\": \"brauerkit/1\"") != std::string::npos);
}

TEST_CASE("cli: height subcommand") {
    std::string path = write_temp("fermat.job", kFermatDoc);
    CmdResult r = run_cli("height " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("height: h=1") != std::string::npos);
    // byte-identical across runs
    CmdResult r2 = run_cli("height " + path);
    CHECK(r.output == r2.output);
    // machine format
    CmdResult m = run_cli("height " + path + " --format machine");
    CHECK(m.exit_code == 0);
    CHECK(m.output.find("brauerkit/1") != std::string::npos);
}

TEST_CASE("cli: exit code 2 on parse errors") {
    std::string path = write_temp("broken.job", "kind: complete_intersection\npoly: \n");
    CmdResult r = run_cli("stienstra-ci " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("parse error") != std::string::npos);
}

TEST_CASE("cli: exit code 1 on pipeline errors") {
    // constants only: artin precondition violation
    std::string path = write_temp("flat.job",
                                  "kind: elliptic_weierstrass\nprime: 5\nvars: t\n"
                                  "a4: 1\na6: 2\norder: 9\noutputs: fgl\n");
    CmdResult r = run_cli("artin " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("cli: artin subcommand reproduces the char-5 law") {
    std::string path = write_temp("wmfq.job",
                                  "kind: elliptic_weierstrass\nprime: 5\nvars: t\n"
                                  "a2: 3*t^2\na6: 4*t^10 + 3*t^6 + 4*t^2\n"
                                  "order: 11\noutputs: fgl p_series height\n");
    CmdResult r = run_cli("artin " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4*t^5 + O(11)") != std::string::npos);
    CHECK(r.output.find("x + y + 2*x^2*y") != std::string::npos);
}

TEST_CASE("cli: reproduce with a lowered order marks heavy rows skipped") {
    CmdResult r = run_cli("reproduce --order 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("skipped-by-order") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: flag overrides") {
    std::string doc =
        "kind: complete_intersection\nvars: x0 x1 x2 x3\n"
        "poly: x0^4 + x1^4 + x2^4 + x3^4\nprime: 5\norder: 11\nhmax: 1\noutputs: height\n";
    std::string path = write_temp("fermat13.job", doc);
    CmdResult r = run_cli("height " + path + " --prime 13 --order 14");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("height: h=1") != std::string::npos);
}
