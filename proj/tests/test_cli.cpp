#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "beyondplanar/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs a shell pipeline with $BPL pointing at the CLI; captures stdout and the
// exit code of the last command.
Run sh(const std::string& script) {
    std::string cmd = "BPL='" BPL_PATH "'; cd '" + fs::temp_directory_path().string() + "'; " + script + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    Run r;
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, FcfPipelineOnK12) {
    auto r = sh("$BPL gen complete 12 | $BPL draw fcf2subdiv | $BPL check fcf");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"holds\": true"), std::string::npos);
}

TEST(Cli, KingPipeline) {
    auto r = sh("$BPL gen king 5 5 | $BPL draw convex | $BPL check simple");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(sh("$BPL gen king 5 5 | $BPL draw convex | $BPL check kplanar --k 1").code, 1);
}

TEST(Cli, FailingPredicatePrintsVerdict) {
    auto r = sh("$BPL gen complete 5 | $BPL draw convex | $BPL check fcf --witness");
    EXPECT_EQ(r.code, 1);
    auto v = bp::io::read_verdict(r.out);
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.edges.size(), 3u);
    auto plain = bp::io::read_verdict(sh("$BPL gen complete 5 | $BPL draw convex | $BPL check fcf").out);
    EXPECT_TRUE(plain.edges.empty());
}

TEST(Cli, CertifyCcc11) {
    auto r = sh("$BPL certify --ccc 11 --k 3");
    EXPECT_EQ(r.code, 0);
    auto c = bp::io::read_certificate(r.out);
    EXPECT_EQ(c.bound.value, bp::Rational(536576, 5));
    EXPECT_EQ(c.subject.m, 33792);
    EXPECT_EQ(sh("$BPL certify --kn 12 --sub 2 --k 1").code, 1);
    EXPECT_EQ(sh("$BPL certify --kn 19 --sub 3 --k 1").code, 0);
    EXPECT_EQ(sh("$BPL certify --k 1").code, 2);
}

TEST(Cli, FilesAndFixtures) {
    fs::path dir = fs::temp_directory_path() / "bpl_cli_test";
    fs::create_directories(dir);
    std::string d = dir.string();
    EXPECT_EQ(sh("$BPL gen hypercube 4 -o " + d + "/g.json").code, 0);
    EXPECT_EQ(sh("$BPL draw quasi1subdiv " + d + "/g.json -o " + d + "/d.json").code, 0);
    EXPECT_EQ(sh("$BPL check quasi " + d + "/d.json --k 3").code, 0);
    EXPECT_EQ(sh("$BPL draw routepath " + d + "/d.json --u 0 --v 15 --class quasi3 | $BPL check quasi").code, 0);
    EXPECT_EQ(sh("$BPL render " + d + "/d.json --markers -o " + d + "/d.svg").code, 0);
    std::ifstream svg(d + "/d.svg");
    std::string head;
    std::getline(svg, head);
    EXPECT_EQ(head.rfind("<?xml", 0), 0u);
    {
        std::ofstream fx(d + "/fx.json");
        fx << R"({"kind":"crossings","graph":{"kind":"graph","n":4,"family":"","edges":[[0,2],[1,3]],"labels":[],"rotation":null},"crossings":[{"a":0,"b":1,"ta":"1/2","tb":"1/2","at":null}]})";
    }
    EXPECT_EQ(sh("$BPL check kplanar --fixture " + d + "/fx.json --k 1").code, 0);
    EXPECT_EQ(sh("$BPL check gap --fixture " + d + "/fx.json --k 0").code, 1);
    fs::remove_all(dir);
}

TEST(Cli, Reduce) {
    auto r = sh("echo '{\"A\":[3,3,3],\"B\":9}' > inst.json; echo '{\"triples\":[[0,1,2]]}' > w.json; "
                "$BPL reduce inst.json --witness w.json | $BPL check fcf");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(sh("echo '{\"A\":[2,3,4],\"B\":9}' | $BPL reduce").code, 2);
}

TEST(Cli, ErrorsMapToExitCodes) {
    EXPECT_EQ(sh("$BPL frobnicate").code, 2);
    EXPECT_EQ(sh("$BPL gen complete 5 --bogus").code, 2);
    EXPECT_EQ(sh("$BPL gen nosuch 3").code, 2);
    EXPECT_EQ(sh("echo '{' | $BPL check fcf").code, 2);
    EXPECT_EQ(sh("$BPL gen path 3 | $BPL op n2c").code, 2);
    EXPECT_EQ(sh("$BPL gen complete 12 | $BPL draw convex | $BPL check quasi --k 7 --budget 10").code, 3);
    EXPECT_EQ(sh("$BPL --help > /dev/null").code, 0);
}

TEST(Cli, Operations) {
    auto r = sh("$BPL gen complete 5 | $BPL op n2c");
    EXPECT_EQ(r.code, 0);
    auto g = bp::io::read_graph(r.out);
    EXPECT_EQ(g.n(), 20);
    EXPECT_EQ(bp::io::read_graph(sh("$BPL gen complete 12 | $BPL op subdivide --s 2").out).n(), 144);
    EXPECT_EQ(bp::io::read_graph(sh("$BPL gen cycle 3 | $BPL op addpath --u 0 --v 1 --length 5").out).m(), 8u);
}

TEST(Cli, OutputIsDeterministic) {
    std::string script = "$BPL gen random 9 90 5 | $BPL draw boxvisn2c";
    auto a = sh(script), b = sh(script);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(bp::io::write(bp::io::read_drawing(a.out)), a.out);
}

TEST(Cli, HiddenOracle) {
    auto r = sh("$BPL gen complete 5 | $BPL draw convex | $BPL oracle gap --k 1");
    EXPECT_EQ(r.code, 0);
}
