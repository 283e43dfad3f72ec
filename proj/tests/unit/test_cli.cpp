#include "doctest.h"
#include "wittdiv/cli.hpp"
#include "wittdiv/witt.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace wittdiv;

namespace {
struct Run {
    int code;
    std::string out, err;
};
Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("table commands") {
    Run t = run({"table1", "--terms", "5"});
    CHECK(t.code == 0);
    CHECK(t.out == "i\tcoefficient of [q^-i]\n0\t1\n1\t-3\n2\t5\n3\t-10\n4\t24\n5\t-55\n");
    CHECK(run({"table1", "--terms", "0"}).out == "i\tcoefficient of [q^-i]\n0\t1\n");
    CHECK(run({"table2", "--d1", "1", "--d2", "1"}).out == "i\tcoefficient of [q^-i]\n0\t1\n1\t-1\n");
    Run n = run({"table2", "--q", "2"});
    CHECK(n.out.find("79\t-1343840109164979124000\n") != std::string::npos);
    CHECK(n.out.find("hadamard_norm(q=2)\t395.538829916911\n") != std::string::npos);
    CHECK(n.out.find("pc_seminorm_1(q=2)\t0.18131971426359") != std::string::npos);
    CHECK(run({"table1", "--terms", "3", "--format", "csv"}).out == "i,coefficient\n0,1\n1,-3\n2,5\n3,-10\n");
}

TEST_CASE("generic commands") {
    Run m = run({"mobius", "--patterns", "2,1;1,2"});
    CHECK(m.code == 0);
    CHECK(m.out.find("M\t3\ne\t3\n") != std::string::npos);
    CHECK(m.err.empty());
    Run dom = run({"mobius", "--patterns", "2;3"});
    CHECK(dom.code == 0);
    CHECK(dom.err == "warning: dropping dominated pattern vector 3\n");
    CHECK(run({"zeta", "--variety", "GL2", "--twist", "-4"}).out == "[1] - [q^-1] - [q^-2] + [q^-3]\n");
    CHECK(run({"limit", "--variety", "A1", "--patterns", "2", "--cutoff", "10"}).out == "[1] - [q^-1] + O([q^-11])\n");
    CHECK(run({"density", "--labels", "conf:2", "--d", "1,1", "--cutoff", "2"}).out == "[1] - [q^-1] + O([q^-3])\n");
    CHECK(run({"zeta", "--variety", "P1", "--sym", "2"}).out == "[q^2] + [q] + [1]\n");
    Run a = run({"theoremA", "--variety", "A2", "--patterns", "2,0;0,3", "--cutoff", "12"});
    CHECK(a.out.find("agree\ttrue") != std::string::npos);
    Run b = run({"theoremB", "--lambda", "1", "--degree", "12", "--cutoff", "12"});
    CHECK(b.out.find("depth_nondecreasing\ttrue") != std::string::npos);
    CHECK(b.out.find("\n12\t22\n") != std::string::npos);
    Run r = run({"report", "--patterns", "2,1;1,2", "--q", "2", "--degree", "2", "--cutoff", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hadamard_criterion\ttrue") != std::string::npos);
    Run f = run({"report", "--labels", "conf:2", "--finite-label", "--q", "2", "--degree", "1", "--cutoff", "4"});
    CHECK(f.out.find("finite_label_criterion\tfalse") != std::string::npos);
}

TEST_CASE("json output parses back") {
    Run j = run({"limit", "--variety", "A1", "--labels", "conf:2", "--cutoff", "12", "--format", "json"});
    CHECK(j.code == 0);
    WittDivisor d = divisor_from_json(j.out);
    CHECK(d.horizon() == 12);
    CHECK(d.coeff(-5) == -55);
    Run csv = run({"zeta", "--variety", "GL2", "--format", "csv"});
    CHECK(csv.out == "exp,coeff\n4,1\n3,-1\n2,-1\n1,1\n");
}

TEST_CASE("output determinism and files") {
    std::vector<std::string> args{"report", "--labels", "conf:2", "--degree", "3", "--cutoff", "8", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::string path = "cli_test_output.txt";
    Run w = run({"table1", "--terms", "2", "--out", path});
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "i\tcoefficient of [q^-i]\n0\t1\n1\t-3\n2\t5\n");
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"limit", "--variety", "Q3", "--patterns", "2"}).code == 2);
    CHECK(run({"limit", "--variety", "A1"}).code == 2);
    CHECK(run({"table2", "--q", "1"}).code == 2);
    CHECK(run({"mobius", "--patterns", "2,x"}).code == 2);
    CHECK(run({"zeta", "--variety", "A1", "--special", "1"}).code == 3);
    CHECK(run({"limit", "--labels", "explicit:2", "--variety", "A1"}).code == 2);
    CHECK(run({"limit", "--labels", "conf:2", "--variety", "pt"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}
